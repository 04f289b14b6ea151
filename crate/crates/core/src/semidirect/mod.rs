//! The group `R ⋊ μ`: element arithmetic, finite cyclic subgroups, their
//! conjugacy classification and maximality, and the character bookkeeping
//! for subgroup inclusions.

mod element;
mod ideal_quotient;
pub(crate) mod label;

pub use element::SemidirectElement;
pub use ideal_quotient::IdealQuotient;
pub use label::{
    characters_restricting_to, conjugacy_label, enumerate_maximal_classes, is_maximal,
    FiniteSubgroupLabel,
};
