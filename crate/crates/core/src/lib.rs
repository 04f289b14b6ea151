//! Exact calculator for the topological K-theory of ring C*-algebras
//! attached to rings of integers in number fields.
//!
//! Everything is computed over exact integer and rational arithmetic: Smith
//! and Hermite normal forms, arithmetic in an order of a number field, the
//! conjugacy combinatorics of the semidirect product `R ⋊ μ`, the structure
//! endomorphism `η_c` obtained from affine permutations of `R/cR`, direct
//! limits over the admissible divisibility system, and the finite-group
//! induction/restriction calculus that backs the final identifications.

pub mod error;
pub mod linalg;
pub mod poly;
pub mod field;
pub mod semidirect;
pub mod eta;
pub mod tower;
pub mod indres;
pub mod builtin;
pub mod report;

pub use error::Error;

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
