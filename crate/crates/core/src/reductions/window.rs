//! Exhaustive recoloring inside rung windows.

use crate::lists::{Color, ListAssignment};
use crate::prism::Prism;
use crate::solver::coloring::Coloring;
use crate::solver::lexmin::lexmin_core;

/// Node limit for one window search.
pub const WINDOW_NODE_LIMIT: u64 = 10_000_000;

/// Best recoloring of one `w`-rung window, everything outside held fixed,
/// if it lowers the word. Among windows the least word wins, then the
/// earliest start.
pub fn window_improve(p: &Prism, l: &ListAssignment, c: &Coloring, w: usize) -> Option<Coloring> {
    let windows = p.windows(w.min(p.n())).ok()?;
    let adj = p.adjacency_lists();
    let word = c.word();
    let mut best: Option<Coloring> = None;
    for win in windows {
        let mut fixed: Vec<Option<Color>> = c.colors().iter().map(|&x| Some(x)).collect();
        for v in win.vertices() {
            fixed[v] = None;
        }
        let upper = best.as_ref().map_or_else(|| word.clone(), Coloring::word);
        // A budget overrun only means this window is not searched fully.
        if let Ok(Some(sol)) = lexmin_core(&adj, l.lists(), &fixed, Some(&upper), WINDOW_NODE_LIMIT) {
            best = Some(sol.coloring);
        }
    }
    best
}

/// Repeats [`window_improve`] over widths `1..=w_max`, restarting at width 1
/// after every success, until no window lowers the word. The result is a
/// local minimum only.
pub fn improve_to_local_min(p: &Prism, l: &ListAssignment, c: &Coloring, w_max: usize) -> Coloring {
    let mut cur = c.clone();
    'outer: loop {
        for w in 1..=w_max.min(p.n()) {
            if let Some(better) = window_improve(p, l, &cur, w) {
                cur = better;
                continue 'outer;
            }
        }
        return cur;
    }
}
