use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{snf, IntMatrix};

/// Finitely generated abelian group presented as `ℤ^generators / im(relations)`,
/// with cached invariant factors.
///
/// Invariant factors are normalized nonnegative with zeros trailing and the
/// nonzero part forming a divisibility chain; the list always has length
/// `generators`, so the free rank is the number of trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupPresentation {
    generators: usize,
    relations: IntMatrix,
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroupPresentation {
    /// Presentation with relations given by the columns of `relations`.
    pub fn new(relations: IntMatrix) -> Self {
        let generators = relations.rows();
        let s = snf(&relations);
        let mut invariant_factors = s.diagonal();
        invariant_factors.resize(generators, BigInt::zero());
        Self { generators, relations, invariant_factors }
    }

    pub fn free(rank: usize) -> Self {
        Self::new(IntMatrix::zero(rank, 0))
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// All invariant factors, including the 1s and trailing zeros.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_zero()).count()
    }

    /// Invariant factors > 1, i.e. the torsion part.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank() == 0 && self.torsion().is_empty()
    }

    /// Structural equality: same free rank and torsion invariants.
    pub fn same_group(&self, other: &Self) -> bool {
        self.free_rank() == other.free_rank() && self.torsion() == other.torsion()
    }
}

/// Invariant-factor decomposition of `ℤ^rows / im(m)`.
pub fn cokernel(m: &IntMatrix) -> AbelianGroupPresentation {
    AbelianGroupPresentation::new(m.clone())
}
