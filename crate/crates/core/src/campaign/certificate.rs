//! Self-contained certificates that can be re-checked without searching.
//!
//! ```text
//! prismcolor-certificate v1
//! claim CH3-UNSAT-N5
//! verdict unsat
//! prism n=5
//! list U0 = 0,1
//! ...
//! refute split U0
//! refute conflict V0
//! ...
//! ```
//!
//! A `verdict sat` certificate carries `color` records instead of
//! `refute` lines, and optionally `bound <b>` capping every class.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lists::ListAssignment;
use crate::prism::Prism;
use crate::solver::coloring::{is_proper, respects_lists, Coloring};
use crate::solver::search::{check_refutation, Refutation};
use crate::text::{parse_document_with, write_assignment, write_colors};

pub const FORMAT_TAG: &str = "prismcolor-certificate v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Sat { coloring: Coloring, bound: Option<usize> },
    Unsat(Refutation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub claim: String,
    pub prism: Prism,
    pub lists: ListAssignment,
    pub witness: Witness,
}

impl Certificate {
    pub fn verdict(&self) -> &'static str {
        match self.witness {
            Witness::Sat { .. } => "sat",
            Witness::Unsat(_) => "unsat",
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{FORMAT_TAG}\nclaim {}\nverdict {}\n", self.claim, self.verdict());
        if let Witness::Sat { bound: Some(b), .. } = &self.witness {
            let _ = writeln!(out, "bound {b}");
        }
        out += &write_assignment(&self.prism, &self.lists);
        match &self.witness {
            Witness::Sat { coloring, .. } => out += &write_colors(coloring),
            Witness::Unsat(r) => {
                for line in r.to_lines() {
                    let _ = writeln!(out, "refute {line}");
                }
            }
        }
        out
    }

    pub fn parse(src: &str) -> Result<Certificate> {
        let keywords = ["prismcolor-certificate", "claim", "verdict", "bound", "refute"];
        let (doc, extra) = parse_document_with(src, |kw| keywords.contains(&kw))?;
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        let mut tag = None;
        let mut claim = None;
        let mut verdict = None;
        let mut bound = None;
        let mut steps = Vec::new();
        for (line, text) in extra {
            let (kw, rest) = text.split_once(' ').unwrap_or((&text, ""));
            let rest = rest.trim();
            match kw {
                "prismcolor-certificate" => tag = Some((line, rest.to_string())),
                "claim" => claim = Some(rest.to_string()),
                "verdict" => verdict = Some((line, rest.to_string())),
                "bound" => {
                    bound = Some(rest.parse::<usize>().map_err(|_| perr(line, format!("bad bound `{rest}`")))?)
                }
                _ => steps.push(
                    crate::solver::search::Refutation::parse_line(rest)
                        .ok_or_else(|| perr(line, format!("bad refutation step `{rest}`")))?,
                ),
            }
        }
        match tag {
            Some((_, v)) if v == "v1" => {}
            Some((line, v)) => return Err(perr(line, format!("unsupported certificate version `{v}`"))),
            None => return Err(perr(1, "missing certificate header".into())),
        }
        let claim = claim.ok_or_else(|| perr(0, "missing claim".into()))?;
        let prism = doc.prism()?;
        let lists = doc.lists.ok_or_else(|| perr(0, "missing list records".into()))?;
        let witness = match verdict {
            Some((_, v)) if v == "sat" => Witness::Sat {
                coloring: doc.coloring.ok_or_else(|| perr(0, "sat certificate without coloring".into()))?,
                bound,
            },
            Some((_, v)) if v == "unsat" => Witness::Unsat(Refutation { steps }),
            Some((line, v)) => return Err(perr(line, format!("unknown verdict `{v}`"))),
            None => return Err(perr(0, "missing verdict".into())),
        };
        Ok(Certificate { claim, prism, lists, witness })
    }

    /// Re-checks the witness. Nothing here searches.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.lists.len() != self.prism.vertex_count() {
            return Err("list count does not match the prism".into());
        }
        match &self.witness {
            Witness::Sat { coloring, bound } => {
                if coloring.len() != self.prism.vertex_count() {
                    return Err("coloring size does not match the prism".into());
                }
                if !is_proper(&self.prism, coloring) {
                    return Err("coloring is not proper".into());
                }
                if !respects_lists(&self.lists, coloring) {
                    return Err("coloring leaves the lists".into());
                }
                if let Some(b) = bound {
                    if coloring.max_class() > *b {
                        return Err(format!("class of size {} exceeds bound {b}", coloring.max_class()));
                    }
                }
                Ok(())
            }
            Witness::Unsat(r) => check_refutation(&self.prism.adjacency_lists(), self.lists.lists(), r),
        }
    }
}
