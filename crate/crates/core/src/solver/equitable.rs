//! Colorings whose classes all stay within `⌈2n/3⌉`.

use crate::error::{Error, Result};
use crate::lists::ListAssignment;
use crate::prism::Prism;
use crate::reductions::window::improve_to_local_min;
use crate::solver::coloring::{equitable_bound, is_proper, respects_lists, Coloring};
use crate::solver::lexmin::{lexmin_with, LexMinConfig};
use crate::solver::search::solve_proper;
use crate::text::write_assignment;

/// Width limit of the improvement loop used past the exact budget.
pub const IMPROVE_WIDTH: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitableOutcome {
    pub coloring: Coloring,
    /// True when the coloring is an exact lexmin coloring.
    pub exact: bool,
    pub bound: usize,
}

pub fn equitable_coloring(p: &Prism, l: &ListAssignment) -> Result<EquitableOutcome> {
    equitable_coloring_with(p, l, &LexMinConfig::default())
}

/// Exact lexmin within `cfg`; beyond it, a proper coloring pushed to a
/// local minimum of the window engine. Either way the bound is re-checked.
pub fn equitable_coloring_with(
    p: &Prism,
    l: &ListAssignment,
    cfg: &LexMinConfig,
) -> Result<EquitableOutcome> {
    if l.k() != 3 {
        return Err(Error::InvalidParameter(format!(
            "equitable bound is built in for 3-lists only, got k={}",
            l.k()
        )));
    }
    let bound = equitable_bound(p.n());
    let falsified = || Error::Falsified {
        n: p.n(),
        bound,
        assignment: write_assignment(p, l),
    };
    let (coloring, exact) = match lexmin_with(p, l, cfg) {
        Ok(sol) => {
            if !sol.coloring.is_bounded(bound) {
                return Err(falsified());
            }
            (sol.coloring, true)
        }
        Err(Error::SizeBudget(_)) | Err(Error::BudgetExceeded { .. }) => {
            let start = solve_proper(p, l).coloring().cloned().ok_or(Error::Unsat)?;
            (improve_to_local_min(p, l, &start, IMPROVE_WIDTH), false)
        }
        Err(e) => return Err(e),
    };
    if !(is_proper(p, &coloring) && respects_lists(l, &coloring)) {
        return Err(Error::Internal("equitable coloring failed its own check".into()));
    }
    if !coloring.is_bounded(bound) {
        // A local minimum is not a proof; only exhaustion can falsify.
        return Err(if exact {
            falsified()
        } else {
            Error::Internal(format!(
                "local minimum exceeds bound {bound}; rerun with a larger exact budget"
            ))
        });
    }
    Ok(EquitableOutcome { coloring, exact, bound })
}
