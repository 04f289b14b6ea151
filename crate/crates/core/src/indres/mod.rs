//! Induction and restriction on representation rings of finite groups:
//! exact character tables over cyclotomic numbers, the double coset
//! formula, and norm-element annihilation bounds for integer modules.

mod cyclo;
mod group;
mod chartab;
mod repring;
mod norm;

pub use cyclo::{CycField, CycNum};
pub use group::{catalog, catalog_names, FiniteGroup};
pub use chartab::CharacterTable;
pub use repring::{
    double_coset_check, double_coset_check_all, induce, restrict, RepRingElement, SubgroupContext,
};
pub use norm::{norm_annihilation_check, NormReport};

use crate::Result;

/// Number of irreducible characters of the cyclic group of order m,
/// computed through the character-table machinery (not just asserted).
pub fn cyclic_irreducible_count(m: u64) -> Result<u64> {
    let g = FiniteGroup::cyclic(m as usize)?;
    let t = CharacterTable::new(&g)?;
    Ok(t.irreducible_count() as u64)
}
