//! Parser for the configuration file format described in `configs.txt`.

use std::fmt;

use crate::error::{Error, Result};
use crate::prism::{layer_of, parse_vertex_name, rung_of, vertex_name};

/// Largest configuration width.
pub const MAX_WIDTH: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Blue,
    Red,
    Yellow,
    Green,
    Pink,
}

impl Role {
    pub const ALL: [Role; 5] = [Role::Blue, Role::Red, Role::Yellow, Role::Green, Role::Pink];

    pub fn name(self) -> &'static str {
        match self {
            Role::Blue => "blue",
            Role::Red => "red",
            Role::Yellow => "yellow",
            Role::Green => "green",
            Role::Pink => "pink",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        Role::ALL.into_iter().find(|r| r.name() == s)
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellSpec {
    Role(Role),
    NotBlue,
    Free,
}

/// Class-size hypothesis under which a configuration is claimed reducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    RedBlue,
    Blue,
    Pi4,
}

/// A color reference inside a move. `Cell(i)` is the original color of
/// window cell `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ref {
    Role(Role),
    Cell(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Set { cell: usize, to: Ref },
    Pick { cell: usize, notin: Vec<Ref> },
    GuardEq(Ref, Ref),
    GuardNe(Ref, Ref),
    GuardIn(Ref, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternative {
    pub label: String,
    pub steps: Vec<Step>,
}

impl Alternative {
    pub fn sets(&self) -> impl Iterator<Item = (usize, Ref)> + '_ {
        self.steps.iter().filter_map(|s| match s {
            Step::Set { cell, to } => Some((*cell, *to)),
            _ => None,
        })
    }

    pub fn picks(&self) -> impl Iterator<Item = (usize, &[Ref])> + '_ {
        self.steps.iter().filter_map(|s| match s {
            Step::Pick { cell, notin } => Some((*cell, notin.as_slice())),
            _ => None,
        })
    }
}

/// Window cells are indexed like vertices of a prism: cell `(layer, i)` has
/// index `2*i + layer`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub name: String,
    pub width: usize,
    pub hypothesis: Hypothesis,
    /// Required `n`, if any.
    pub n: Option<usize>,
    pub cells: Vec<CellSpec>,
    pub alternatives: Vec<Alternative>,
}

impl Config {
    pub fn cell_name(&self, cell: usize) -> String {
        vertex_name(cell)
    }

    /// Roles that appear in some cell.
    pub fn roles(&self) -> Vec<Role> {
        let mut out: Vec<Role> = self
            .cells
            .iter()
            .filter_map(|c| match c {
                CellSpec::Role(r) => Some(*r),
                _ => None,
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

const SHIPPED: &str = include_str!("configs.txt");

/// The configurations shipped with the crate.
pub fn builtin_configs() -> Vec<Config> {
    parse_configs(SHIPPED).expect("shipped configuration file parses")
}

pub fn builtin_source() -> &'static str {
    SHIPPED
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_configs(src: &str) -> Result<Vec<Config>> {
    let mut configs: Vec<Config> = Vec::new();
    let mut open_alt: Option<(usize, Alternative)> = None;
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let mut words = text.split_whitespace();
        let kw = words.next().unwrap_or("");
        if let Some((_, alt)) = open_alt.as_mut() {
            let cfg = configs.last().unwrap();
            match kw {
                "end" => {
                    let (_, alt) = open_alt.take().unwrap();
                    validate_alt(line, cfg, &alt)?;
                    configs.last_mut().unwrap().alternatives.push(alt);
                }
                "set" | "pick" | "guard" => {
                    let rest = text[kw.len()..].trim();
                    alt.steps.push(parse_step(line, cfg, kw, rest)?);
                }
                _ => return Err(perr(line, format!("unexpected `{kw}` inside alt"))),
            }
            continue;
        }
        match kw {
            "config" => {
                let name = words.next().ok_or_else(|| perr(line, "config needs a name"))?;
                if configs.iter().any(|c| c.name == name) {
                    return Err(perr(line, format!("duplicate config {name}")));
                }
                let mut width = None;
                let mut hyp = None;
                let mut n = None;
                for kv in words {
                    let (k, v) = kv
                        .split_once('=')
                        .ok_or_else(|| perr(line, format!("expected key=value, got `{kv}`")))?;
                    match k {
                        "width" => width = v.parse::<usize>().ok(),
                        "n" => n = v.parse::<usize>().ok(),
                        "hyp" => {
                            hyp = Some(match v {
                                "redblue" => Hypothesis::RedBlue,
                                "blue" => Hypothesis::Blue,
                                "pi4" => Hypothesis::Pi4,
                                _ => return Err(perr(line, format!("unknown hypothesis `{v}`"))),
                            })
                        }
                        _ => return Err(perr(line, format!("unknown key `{k}`"))),
                    }
                }
                let width = width
                    .filter(|w| (1..=MAX_WIDTH).contains(w))
                    .ok_or_else(|| perr(line, format!("width must be in 1..={MAX_WIDTH}")))?;
                let hypothesis = hyp.ok_or_else(|| perr(line, "missing hyp="))?;
                let n = if hypothesis == Hypothesis::Pi4 { Some(n.unwrap_or(4)) } else { n };
                configs.push(Config {
                    name: name.to_string(),
                    width,
                    hypothesis,
                    n,
                    cells: vec![CellSpec::Free; 2 * width],
                    alternatives: Vec::new(),
                });
            }
            "cell" => {
                let cfg = configs
                    .last_mut()
                    .ok_or_else(|| perr(line, "cell before any config"))?;
                let rest = text[kw.len()..].trim();
                let (name, value) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, "expected `cell <cell> = <value>`"))?;
                let cell = cell_index(line, cfg.width, name.trim())?;
                let spec = match value.trim() {
                    "notblue" => CellSpec::NotBlue,
                    "free" => CellSpec::Free,
                    v => CellSpec::Role(
                        Role::parse(v).ok_or_else(|| perr(line, format!("unknown cell value `{v}`")))?,
                    ),
                };
                cfg.cells[cell] = spec;
            }
            "alt" => {
                if configs.is_empty() {
                    return Err(perr(line, "alt before any config"));
                }
                let label = words.collect::<Vec<_>>().join(" ");
                let label = if label.is_empty() {
                    format!("alt{}", configs.last().unwrap().alternatives.len() + 1)
                } else {
                    label
                };
                open_alt = Some((line, Alternative { label, steps: Vec::new() }));
            }
            _ => return Err(perr(line, format!("unknown record `{kw}`"))),
        }
    }
    if let Some((line, _)) = open_alt {
        return Err(perr(line, "alt without end"));
    }
    for cfg in &configs {
        if cfg.alternatives.is_empty() {
            return Err(perr(0, format!("config {} has no moves", cfg.name)));
        }
    }
    Ok(configs)
}

fn cell_index(line: usize, width: usize, name: &str) -> Result<usize> {
    let v = parse_vertex_name(name).ok_or_else(|| perr(line, format!("bad cell `{name}`")))?;
    if rung_of(v) >= width {
        return Err(perr(line, format!("cell {name} outside width {width}")));
    }
    Ok(v)
}

fn parse_ref(line: usize, cfg: &Config, s: &str) -> Result<Ref> {
    if let Some(r) = Role::parse(s) {
        return Ok(Ref::Role(r));
    }
    Ok(Ref::Cell(cell_index(line, cfg.width, s)?))
}

fn parse_step(line: usize, cfg: &Config, kw: &str, rest: &str) -> Result<Step> {
    match kw {
        "set" => {
            let (cell, to) = rest
                .split_once('=')
                .ok_or_else(|| perr(line, "expected `set <cell> = <ref>`"))?;
            Ok(Step::Set {
                cell: cell_index(line, cfg.width, cell.trim())?,
                to: parse_ref(line, cfg, to.trim())?,
            })
        }
        "pick" => {
            let (cell, refs) = rest
                .split_once(" notin ")
                .ok_or_else(|| perr(line, "expected `pick <cell> notin <refs>`"))?;
            let notin = refs
                .split(',')
                .map(|r| parse_ref(line, cfg, r.trim()))
                .collect::<Result<Vec<_>>>()?;
            Ok(Step::Pick {
                cell: cell_index(line, cfg.width, cell.trim())?,
                notin,
            })
        }
        _ => {
            if let Some((a, b)) = rest.split_once("==") {
                Ok(Step::GuardEq(parse_ref(line, cfg, a.trim())?, parse_ref(line, cfg, b.trim())?))
            } else if let Some((a, b)) = rest.split_once("!=") {
                Ok(Step::GuardNe(parse_ref(line, cfg, a.trim())?, parse_ref(line, cfg, b.trim())?))
            } else if let Some((a, b)) = rest.split_once(" in ") {
                Ok(Step::GuardIn(parse_ref(line, cfg, a.trim())?, cell_index(line, cfg.width, b.trim())?))
            } else {
                Err(perr(line, "expected `guard <ref> ==|!=|in <ref>`"))
            }
        }
    }
}

/// Roles referenced by a move must be bound at match time, and a cell is
/// recolored at most once per alternative.
fn validate_alt(line: usize, cfg: &Config, alt: &Alternative) -> Result<()> {
    let mut bound = cfg.roles();
    bound.push(Role::Blue);
    if cfg.hypothesis == Hypothesis::RedBlue {
        bound.push(Role::Red);
    }
    let check = |r: &Ref| -> Result<()> {
        match r {
            Ref::Role(role) if !bound.contains(role) => Err(perr(
                line,
                format!("role {role} is not bound by config {}", cfg.name),
            )),
            _ => Ok(()),
        }
    };
    let mut touched = Vec::new();
    for step in &alt.steps {
        match step {
            Step::Set { cell, to } => {
                check(to)?;
                touched.push(*cell);
            }
            Step::Pick { cell, notin } => {
                notin.iter().try_for_each(check)?;
                touched.push(*cell);
            }
            Step::GuardEq(a, b) | Step::GuardNe(a, b) => {
                check(a)?;
                check(b)?;
            }
            Step::GuardIn(a, _) => check(a)?,
        }
    }
    let mut sorted = touched.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != touched.len() {
        return Err(perr(line, format!("alt {} recolors a cell twice", alt.label)));
    }
    if touched.is_empty() {
        return Err(perr(line, format!("alt {} recolors nothing", alt.label)));
    }
    Ok(())
}

/// `U<i>`/`V<i>` name of a window cell.
pub fn cell_label(cell: usize) -> String {
    format!("{}{}", layer_of(cell), rung_of(cell))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prism::{vertex_id, Layer};

    #[test]
    fn shipped_file_parses() {
        let cfgs = builtin_configs();
        let names: Vec<&str> = cfgs.iter().map(|c| c.name.as_str()).collect();
        for want in ["F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "P4-1", "P4-5"] {
            assert!(names.contains(&want), "{want} missing");
        }
        let f7 = cfgs.iter().find(|c| c.name == "F7").unwrap();
        assert_eq!(f7.width, 7);
        assert_eq!(f7.cells[vertex_id(Layer::U, 2)], CellSpec::Role(Role::Red));
        assert_eq!(f7.cells[vertex_id(Layer::V, 6)], CellSpec::NotBlue);
        assert!(cfgs.iter().all(|c| c.width <= MAX_WIDTH));
        let p4 = cfgs.iter().find(|c| c.name == "P4-2").unwrap();
        assert_eq!((p4.hypothesis, p4.n), (Hypothesis::Pi4, Some(4)));
    }

    #[test]
    fn parse_errors_have_lines() {
        let bad = "config X width=3 hyp=blue\ncell U5 = blue\n";
        assert!(matches!(parse_configs(bad), Err(Error::Parse { line: 2, .. })));
        let bad = "config X width=3 hyp=blue\nalt\n  pick U0 notin purple\nend\n";
        assert!(matches!(parse_configs(bad), Err(Error::Parse { line: 3, .. })));
        let bad = "config X width=3 hyp=blue\ncell U0 = yellow\nalt\n  pick U0 notin blue\n";
        assert!(matches!(parse_configs(bad), Err(Error::Parse { line: 3, .. })));
        let bad = "config X width=3 hyp=blue\nalt\n  pick U0 notin red\nend\n";
        assert!(matches!(parse_configs(bad), Err(Error::Parse { line: 4, .. })));
        let bad = "config X width=9 hyp=blue\n";
        assert!(matches!(parse_configs(bad), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn steps_parse() {
        let src = "config X width=2 hyp=blue\ncell U0 = yellow\nalt a\n  guard V1 != yellow\n  guard U1 in V0\n  set V0 = U1\n  pick U1 notin blue,yellow,V0\nend\n";
        let cfg = &parse_configs(src).unwrap()[0];
        let alt = &cfg.alternatives[0];
        assert_eq!(alt.label, "a");
        assert_eq!(alt.steps.len(), 4);
        assert_eq!(
            alt.steps[3],
            Step::Pick {
                cell: 2,
                notin: vec![Ref::Role(Role::Blue), Ref::Role(Role::Yellow), Ref::Cell(1)]
            }
        );
        assert_eq!(alt.steps[1], Step::GuardIn(Ref::Cell(2), 1));
    }
}
