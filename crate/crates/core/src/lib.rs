//! List coloring on prism graphs `C_n □ K_2`.
//!
//! The crate builds prisms and list assignments, searches for proper and
//! lexicographically minimal list colorings, recolors reducible
//! configurations, decomposes colorings into blocks, and audits the charge
//! bookkeeping that bounds the largest color class by `⌈2n/3⌉`.
//!
//! ```
//! use prismcolor::prism::Prism;
//! use prismcolor::lists::ListAssignment;
//! use prismcolor::solver::equitable_coloring;
//!
//! let p = Prism::new(6).unwrap();
//! let l = ListAssignment::random_uniform(&p, 3, 6, 7).unwrap();
//! let out = equitable_coloring(&p, &l).unwrap();
//! assert!(out.coloring.max_class() <= 4);
//! ```

pub mod error;
pub mod prism;
pub mod symmetry;
pub mod lists;
pub mod text;
pub mod canon;
pub mod solver;
pub mod reductions;
pub mod discharging;
pub mod campaign;

pub use error::{Error, Result};
