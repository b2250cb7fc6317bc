//! Line-oriented text format for prisms, list assignments and colorings.
//!
//! ```text
//! # comment
//! prism n=4
//! list U0 = 1,2,3
//! list V0 = 1,2,4
//! ...
//! color U0 = 1
//! ...
//! word = 3,3,2
//! ```
//!
//! Records are written in vertex scan order `U0, V0, U1, V1, ...`, so the
//! output of the writers is byte-stable. Blank lines and `#` comments are
//! ignored by the parser. An unsatisfiable instance is written as a line
//! `UNSAT` followed by the assignment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lists::{Color, ListAssignment};
use crate::prism::{parse_vertex_name, vertex_name, Prism};
use crate::solver::coloring::{ColorWord, Coloring};

pub fn write_prism(p: &Prism) -> String {
    format!("prism n={}\n", p.n())
}

fn join(colors: &[Color]) -> String {
    let parts: Vec<String> = colors.iter().map(Color::to_string).collect();
    parts.join(",")
}

pub fn write_lists(l: &ListAssignment) -> String {
    let mut out = String::new();
    for v in 0..l.len() {
        let _ = writeln!(out, "list {} = {}", vertex_name(v), join(l.list(v)));
    }
    out
}

pub fn write_assignment(p: &Prism, l: &ListAssignment) -> String {
    write_prism(p) + &write_lists(l)
}

pub fn write_colors(c: &Coloring) -> String {
    let mut out = String::new();
    for v in 0..c.len() {
        let _ = writeln!(out, "color {} = {}", vertex_name(v), c.color(v));
    }
    out
}

/// Coloring records plus the `word = ...` footer.
pub fn write_coloring(p: &Prism, c: &Coloring) -> String {
    format!("{}{}word = {}\n", write_prism(p), write_colors(c), c.word())
}

pub fn write_unsat(p: &Prism, l: &ListAssignment) -> String {
    format!("UNSAT\n{}", write_assignment(p, l))
}

/// Everything a document may carry. Absent sections are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub n: Option<usize>,
    pub lists: Option<ListAssignment>,
    pub coloring: Option<Coloring>,
    pub word: Option<ColorWord>,
    pub unsat: bool,
}

impl Document {
    pub fn prism(&self) -> Result<Prism> {
        let n = self
            .n
            .ok_or_else(|| Error::Parse { line: 0, msg: "missing `prism n=` record".into() })?;
        Prism::new(n)
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_colors(line: usize, s: &str) -> Result<Vec<Color>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Color>()
                .map_err(|_| perr(line, format!("bad color `{}`", t.trim())))
        })
        .collect()
}

/// Parses one record of the form `<kw> <vertex> = <value>`.
fn vertex_record(line: usize, rest: &str, nv: usize) -> Result<(usize, String)> {
    let (name, value) = rest
        .split_once('=')
        .ok_or_else(|| perr(line, "expected `<vertex> = <value>`"))?;
    let v = parse_vertex_name(name.trim())
        .ok_or_else(|| perr(line, format!("bad vertex `{}`", name.trim())))?;
    if v >= nv {
        return Err(perr(line, format!("vertex {} outside the prism", name.trim())));
    }
    Ok((v, value.trim().to_string()))
}

/// Parses `src` while tolerating lines whose keyword is accepted by
/// `extra`; those lines are returned with their line numbers.
pub fn parse_document_with(
    src: &str,
    extra: impl Fn(&str) -> bool,
) -> Result<(Document, Vec<(usize, String)>)> {
    let mut doc = Document::default();
    let mut lists: Vec<Option<Vec<Color>>> = Vec::new();
    let mut colors: Vec<Option<Color>> = Vec::new();
    let mut saw_color = false;
    let mut saw_list = false;
    let mut passthrough = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (kw, rest) = text.split_once(' ').unwrap_or((text, ""));
        match kw {
            "prism" => {
                let n = rest
                    .trim()
                    .strip_prefix("n=")
                    .and_then(|x| x.parse::<usize>().ok())
                    .ok_or_else(|| perr(line, "expected `prism n=<n>`"))?;
                if doc.n.is_some() {
                    return Err(perr(line, "duplicate prism record"));
                }
                if n < 3 {
                    return Err(perr(line, format!("prism needs n >= 3, got {n}")));
                }
                doc.n = Some(n);
                lists = vec![None; 2 * n];
                colors = vec![None; 2 * n];
            }
            "list" | "color" => {
                if doc.n.is_none() {
                    return Err(perr(line, "record before `prism n=`"));
                }
                let (v, value) = vertex_record(line, rest, lists.len())?;
                if kw == "list" {
                    if lists[v].is_some() {
                        return Err(perr(line, format!("duplicate list for {}", vertex_name(v))));
                    }
                    lists[v] = Some(parse_colors(line, &value)?);
                    saw_list = true;
                } else {
                    if colors[v].is_some() {
                        return Err(perr(line, format!("duplicate color for {}", vertex_name(v))));
                    }
                    let c = parse_colors(line, &value)?;
                    if c.len() != 1 {
                        return Err(perr(line, "a color record takes one color"));
                    }
                    colors[v] = Some(c[0]);
                    saw_color = true;
                }
            }
            "word" => {
                let value = rest.trim().strip_prefix('=').unwrap_or(rest).trim();
                let sizes = parse_colors(line, value)?;
                doc.word = Some(ColorWord::from_sizes(sizes.into_iter().map(|x| x as usize)));
            }
            "UNSAT" => doc.unsat = true,
            _ if extra(kw) => passthrough.push((line, text.to_string())),
            _ => return Err(perr(line, format!("unknown record `{kw}`"))),
        }
    }
    let last = src.lines().count();
    if saw_list {
        let mut full = Vec::with_capacity(lists.len());
        for (v, l) in lists.into_iter().enumerate() {
            full.push(l.ok_or_else(|| perr(last, format!("missing list for {}", vertex_name(v))))?);
        }
        doc.lists = Some(ListAssignment::new(full).map_err(|e| perr(last, e.to_string()))?);
    }
    if saw_color {
        let mut full = Vec::with_capacity(colors.len());
        for (v, c) in colors.into_iter().enumerate() {
            full.push(c.ok_or_else(|| perr(last, format!("missing color for {}", vertex_name(v))))?);
        }
        doc.coloring = Some(Coloring::new(full));
    }
    Ok((doc, passthrough))
}

pub fn parse_document(src: &str) -> Result<Document> {
    parse_document_with(src, |_| false).map(|(d, _)| d)
}

pub fn parse_assignment(src: &str) -> Result<(Prism, ListAssignment)> {
    let doc = parse_document(src)?;
    let p = doc.prism()?;
    let l = doc
        .lists
        .ok_or_else(|| perr(src.lines().count(), "no list records"))?;
    Ok((p, l))
}

pub fn parse_coloring(src: &str) -> Result<(Prism, Coloring)> {
    let doc = parse_document(src)?;
    let p = doc.prism()?;
    let c = doc
        .coloring
        .ok_or_else(|| perr(src.lines().count(), "no color records"))?;
    Ok((p, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assignment_round_trip_is_byte_stable() {
        let p = Prism::new(5).unwrap();
        let l = ListAssignment::random_uniform(&p, 3, 7, 11).unwrap();
        let s = write_assignment(&p, &l);
        let (p2, l2) = parse_assignment(&s).unwrap();
        assert_eq!((p2.n(), &l2), (5, &l));
        assert_eq!(write_assignment(&p2, &l2), s);
    }

    #[test]
    fn coloring_round_trip() {
        let p = Prism::new(3).unwrap();
        let c = Coloring::new(vec![1, 2, 2, 3, 3, 1]);
        let s = write_coloring(&p, &c);
        assert!(s.ends_with("word = 2,2,2\n"));
        let doc = parse_document(&s).unwrap();
        assert_eq!(doc.coloring.as_ref(), Some(&c));
        assert_eq!(doc.word, Some(c.word()));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "prism n=3\n# fine\nlist U0 = 1,2\nlist Q1 = 1,2\n";
        assert_eq!(
            parse_document(bad).unwrap_err(),
            Error::Parse { line: 4, msg: "bad vertex `Q1`".into() }
        );
        let err = parse_document("list U0 = 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_document("prism n=3\ncolor U0 = x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_document("prism n=3\nlist U0 = 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn unsat_echo() {
        let p = Prism::new(3).unwrap();
        let l = ListAssignment::uniform(&p, &[0, 1]).unwrap();
        let doc = parse_document(&write_unsat(&p, &l)).unwrap();
        assert!(doc.unsat);
        assert_eq!(doc.lists, Some(l));
    }
}
