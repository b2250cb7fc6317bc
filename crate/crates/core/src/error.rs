use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("list assignment admits no proper coloring")]
    Unsat,

    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("size budget exceeded: {0}")]
    SizeBudget(String),

    /// Exhaustive search found no bounded coloring. Either the search is
    /// broken or the assignment is a counterexample; never swallow this.
    #[error("FALSIFIED: no {bound}-bounded coloring exists for n={n}; assignment:\n{assignment}")]
    Falsified {
        n: usize,
        bound: usize,
        assignment: String,
    },

    #[error("blue run of {len} consecutive rungs starting at rung {start}")]
    BlueRunTooLong { start: usize, len: usize },

    /// A recoloring move produced an invalid coloring.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
