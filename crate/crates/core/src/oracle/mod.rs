//! Exact supporting machinery: a dense LP solver, small-dimension vertex
//! enumeration and exhaustive subset scans.

pub mod exhaustive;
pub mod lp;
pub mod vertices;

pub use exhaustive::{exhaustive_check, exhaustive_check_pairs};
pub use lp::{lp_solve_dense, Column, LinearProgram, LpSolution, Sense};
pub use vertices::{enumerate_vertices, Inequality, Relation};
