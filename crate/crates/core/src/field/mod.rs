//! Arithmetic in the ring of integers `R` of a number field given by an
//! explicit integral basis: order construction and validation, quotient
//! rings `R/cR` with the coordinate-box representative system, roots of
//! unity, and admissibility of rational integer moduli.

mod spec;
mod order;
mod quotient;
mod maximality;

pub use spec::FieldSpec;
pub use order::{load_field, Order, OrderElement};
pub use quotient::QuotientRing;
pub use maximality::{verify_mu_maximality, MuMaximality};

/// Number of real places of the field defined by a squarefree polynomial.
pub fn real_places(poly: &[num_bigint::BigInt]) -> usize {
    crate::poly::count_real_roots(poly)
}
