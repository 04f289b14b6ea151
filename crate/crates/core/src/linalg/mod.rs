//! Exact integer and rational linear algebra: dense arbitrary-precision
//! matrices, Hermite and Smith normal forms, lattices, saturation and
//! cokernels. No floating point anywhere.

mod matrix;
mod normal_form;
mod lattice;
mod presentation;

pub use matrix::IntMatrix;
pub use normal_form::{hnf, snf, SmithDecomposition};
pub use lattice::{kernel, lattice_intersection, lattice_membership, saturate, Lattice};
pub use presentation::{cokernel, AbelianGroupPresentation};
