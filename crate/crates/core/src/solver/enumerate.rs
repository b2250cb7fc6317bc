//! Exhaustive enumeration of proper list colorings, used as an oracle.

use crate::error::{Error, Result};
use crate::lists::{Color, ListAssignment};
use crate::prism::Prism;
use crate::solver::coloring::Coloring;

/// Largest prism the enumerator accepts.
pub const ENUMERATION_MAX_N: usize = 7;

/// Lazily yields every proper list-respecting coloring in scan-order
/// lexicographic order.
pub struct ProperColorings {
    adj: Vec<Vec<usize>>,
    lists: Vec<Vec<Color>>,
    // choice[v] indexes into lists[v]; `usize::MAX` before first visit
    choice: Vec<usize>,
    depth: usize,
    done: bool,
}

pub fn all_proper_colorings(p: &Prism, l: &ListAssignment) -> Result<ProperColorings> {
    if p.n() > ENUMERATION_MAX_N {
        return Err(Error::SizeBudget(format!(
            "enumeration limited to n <= {ENUMERATION_MAX_N}, got n={}",
            p.n()
        )));
    }
    Ok(ProperColorings::new(p.adjacency_lists(), l.lists().to_vec()))
}

impl ProperColorings {
    pub fn new(adj: Vec<Vec<usize>>, lists: Vec<Vec<Color>>) -> Self {
        let len = lists.len();
        ProperColorings {
            adj,
            lists,
            choice: vec![usize::MAX; len],
            depth: 0,
            done: len == 0,
        }
    }

    fn fits(&self, v: usize, c: Color) -> bool {
        self.adj[v]
            .iter()
            .all(|&u| u >= v || self.lists[u][self.choice[u]] != c)
    }
}

impl Iterator for ProperColorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let len = self.lists.len();
        if self.done {
            return None;
        }
        // Resume after the last yielded leaf.
        if self.depth == len {
            self.depth -= 1;
        }
        loop {
            let v = self.depth;
            let start = self.choice[v].wrapping_add(1);
            let next = (start..self.lists[v].len()).find(|&i| self.fits(v, self.lists[v][i]));
            match next {
                Some(i) => {
                    self.choice[v] = i;
                    if v + 1 == len {
                        self.depth = len;
                        let colors = (0..len).map(|u| self.lists[u][self.choice[u]]).collect();
                        return Some(Coloring::new(colors));
                    }
                    self.depth += 1;
                }
                None => {
                    self.choice[v] = usize::MAX;
                    if v == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                }
            }
        }
    }
}
