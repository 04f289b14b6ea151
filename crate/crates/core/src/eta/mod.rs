//! The structure map `η_c`: the K₀ basis model of `C*(R ⋊ μ)`, rational
//! ranks of the infinite part, affine permutations of `R/cR`, and the exact
//! assembly of the η-matrix by cycle decomposition.

mod labels;
mod ranks;
mod perm;
mod engine;

pub use labels::{K0Label, K0Vector};
pub use ranks::{delta, inf_ranks, invariant_dimensions, molien_alternating_sum};
pub use perm::{affine_permutation, AffinePermutation};
pub use engine::{EtaContext, EtaMatrix, FinCensusReport};
