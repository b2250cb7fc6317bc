pub mod coloring;
pub mod search;
pub mod lexmin;
pub mod enumerate;
pub mod independence;
pub mod equitable;

pub use coloring::{
    equitable_bound, is_proper, is_proper_adj, respects_lists, ColorWord, Coloring,
};
pub use enumerate::{all_proper_colorings, ProperColorings};

pub use equitable::{equitable_coloring, equitable_coloring_with, EquitableOutcome};
pub use independence::{independence_number, prism_independence_number};
pub use lexmin::{lexmin, lexmin_with, LexMinConfig, LexMinSolution};
pub use search::{check_refutation, solve_lists, solve_proper, Refutation, RefutationStep, SolveOutcome};
