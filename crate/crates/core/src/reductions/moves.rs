//! Executing the recoloring moves of a matched configuration.

use crate::error::{Error, Result};
use crate::lists::{Color, ListAssignment};
use crate::prism::Prism;
use crate::reductions::matching::Placement;
use crate::reductions::pattern::{Alternative, Config, Ref, Step};
use crate::solver::coloring::{is_proper, respects_lists, Coloring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveOutcome {
    /// `alternative` indexes `Config::alternatives`.
    Applied { coloring: Coloring, alternative: usize },
    /// No alternative produced a smaller word. `gaps` lists the enabled
    /// alternatives (guards true, lists permitting) that still failed.
    NotApplicable { gaps: Vec<usize> },
}

impl MoveOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            MoveOutcome::Applied { coloring, .. } => Some(coloring),
            MoveOutcome::NotApplicable { .. } => None,
        }
    }

    pub fn is_applied(&self) -> bool {
        matches!(self, MoveOutcome::Applied { .. })
    }
}

fn resolve(r: Ref, c: &Coloring, pl: &Placement) -> Color {
    match r {
        Ref::Role(role) => pl.binding[&role],
        Ref::Cell(i) => c.color(pl.cells[i]),
    }
}

/// Candidate colors per pick, or `None` when the alternative is disabled.
fn enable(
    alt: &Alternative,
    l: &ListAssignment,
    c: &Coloring,
    pl: &Placement,
) -> Option<Vec<(usize, Vec<Color>)>> {
    for step in &alt.steps {
        let ok = match step {
            Step::GuardEq(a, b) => resolve(*a, c, pl) == resolve(*b, c, pl),
            Step::GuardNe(a, b) => resolve(*a, c, pl) != resolve(*b, c, pl),
            Step::GuardIn(a, cell) => l.contains(pl.cells[*cell], resolve(*a, c, pl)),
            Step::Set { cell, to } => l.contains(pl.cells[*cell], resolve(*to, c, pl)),
            Step::Pick { .. } => true,
        };
        if !ok {
            return None;
        }
    }
    let mut picks = Vec::new();
    for (cell, notin) in alt.picks() {
        let v = pl.cells[cell];
        let banned: Vec<Color> = notin.iter().map(|r| resolve(*r, c, pl)).collect();
        let allowed: Vec<Color> = l.list(v).iter().copied().filter(|x| !banned.contains(x)).collect();
        if allowed.is_empty() {
            return None;
        }
        picks.push((v, allowed));
    }
    Some(picks)
}

/// Tries the alternatives in order; within one, pick choices are tried in
/// ascending color order and the first proper, list-respecting coloring
/// with a strictly smaller word is returned.
pub fn apply_move(
    p: &Prism,
    l: &ListAssignment,
    c: &Coloring,
    cfg: &Config,
    pl: &Placement,
) -> Result<MoveOutcome> {
    let word = c.word();
    let mut gaps = Vec::new();
    for (idx, alt) in cfg.alternatives.iter().enumerate() {
        let Some(picks) = enable(alt, l, c, pl) else {
            continue;
        };
        let mut base = c.clone();
        for (cell, to) in alt.sets() {
            base.set(pl.cells[cell], resolve(to, c, pl));
        }
        let mut choice = vec![0usize; picks.len()];
        let found = loop {
            let mut cand = base.clone();
            for (k, (v, allowed)) in picks.iter().enumerate() {
                cand.set(*v, allowed[choice[k]]);
            }
            if is_proper(p, &cand) && cand.word() < word {
                break Some(cand);
            }
            if !advance(&mut choice, &picks) {
                break None;
            }
        };
        match found {
            Some(out) => {
                if !(is_proper(p, &out) && respects_lists(l, &out) && out.word() < word) {
                    return Err(Error::Internal(format!(
                        "{} alternative {} produced an invalid coloring",
                        cfg.name, alt.label
                    )));
                }
                return Ok(MoveOutcome::Applied { coloring: out, alternative: idx });
            }
            None => gaps.push(idx),
        }
    }
    Ok(MoveOutcome::NotApplicable { gaps })
}

/// Odometer step over pick choices; false once every combination is used.
fn advance(choice: &mut [usize], picks: &[(usize, Vec<Color>)]) -> bool {
    for k in (0..choice.len()).rev() {
        choice[k] += 1;
        if choice[k] < picks[k].1.len() {
            return true;
        }
        choice[k] = 0;
    }
    false
}

/// Placements of `configs` in `c` at which some move strictly lowers the
/// word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigReport {
    pub hits: Vec<ConfigHit>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigHit {
    pub config: String,
    pub placement: Placement,
    pub alternative: String,
    pub improved: Coloring,
}

impl ConfigReport {
    pub fn is_empty(&self) -> bool {
        self.hits.is_empty()
    }
}

pub fn assert_config_free(
    p: &Prism,
    c: &Coloring,
    l: &ListAssignment,
    configs: &[Config],
    opts: crate::reductions::matching::MatchOptions,
) -> Result<ConfigReport> {
    let mut hits = Vec::new();
    for cfg in configs {
        for pl in crate::reductions::matching::find_matches(p, c, cfg, opts) {
            if let MoveOutcome::Applied { coloring, alternative } = apply_move(p, l, c, cfg, &pl)? {
                hits.push(ConfigHit {
                    config: cfg.name.clone(),
                    placement: pl,
                    alternative: cfg.alternatives[alternative].label.clone(),
                    improved: coloring,
                });
            }
        }
    }
    Ok(ConfigReport { hits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prism::{vertex_id, Layer};
    use crate::reductions::matching::{find_matches, MatchOptions};
    use crate::reductions::pattern::builtin_configs;

    /// Π8 colored red/blue in a checkerboard, except that U1's list offers
    /// a third color; that is an F1 placement with a one-step repair.
    #[test]
    fn f1_recolors_the_center() {
        let p = Prism::new(8).unwrap();
        let (b, r) = (0, 1);
        let mut colors = vec![0; 16];
        for i in 0..8 {
            colors[vertex_id(Layer::U, i)] = if i % 2 == 1 { b } else { r };
            colors[vertex_id(Layer::V, i)] = if i % 2 == 1 { r } else { b };
        }
        // Break the tie so blue is the unique largest class.
        colors[vertex_id(Layer::U, 4)] = 5;
        let c = Coloring::new(colors.clone());
        let mut lists: Vec<Vec<Color>> = colors.iter().map(|&x| vec![x, 6, 7]).collect();
        lists[vertex_id(Layer::U, 1)] = vec![b, r, 2];
        let l = ListAssignment::new(lists).unwrap();
        let f1 = builtin_configs().into_iter().find(|c| c.name == "F1").unwrap();
        let matches = find_matches(&p, &c, &f1, MatchOptions::default());
        let pl = matches
            .iter()
            .find(|pl| pl.cells[vertex_id(Layer::U, 1)] == vertex_id(Layer::U, 1) && pl.role(crate::reductions::pattern::Role::Blue) == Some(b))
            .expect("planted placement");
        let out = apply_move(&p, &l, &c, &f1, pl).unwrap();
        let got = out.coloring().unwrap();
        assert_eq!(got.color(vertex_id(Layer::U, 1)), 2);
        assert_eq!(got.class_size(b) + 1, c.class_size(b));
    }
}
