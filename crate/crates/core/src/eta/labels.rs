use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::semidirect::FiniteSubgroupLabel;

/// Symbolic basis label for K₀(C*(R ⋊ μ)).
///
/// `Unit` is the class of 1. `Fin` classes are spectral projections of the
/// canonical generator of a maximal class other than (μ), with a nontrivial
/// character index; `Mu` classes are the spectral projections of `s_ζ`.
/// `Inf` labels the rational infinite part beyond the unit (even exterior
/// degrees); they never occur in finite-block vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum K0Label {
    Unit,
    Fin { label: FiniteSubgroupLabel, chi: u64 },
    Mu { chi: u64 },
    Inf { k: u64, idx: u64 },
}

impl K0Label {
    pub fn display(&self) -> String {
        match self {
            K0Label::Unit => "[1]".into(),
            K0Label::Fin { label, chi } => {
                format!("fin(i={}, b={:?}, chi={})", label.i, label.rep, chi)
            }
            K0Label::Mu { chi } => format!("mu(chi={chi})"),
            K0Label::Inf { k, idx } => format!("inf(k={k}, idx={idx})"),
        }
    }
}

/// Finitely supported integer vector over K₀ labels.
///
/// Cycle computations only ever produce integral coefficients on the
/// Unit/Fin/Mu components; the rational infinite part is carried separately
/// as a diagonal multiset in `EtaMatrix`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct K0Vector {
    coeffs: BTreeMap<K0Label, BigInt>,
}

impl K0Vector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: K0Label, coeff: impl Into<BigInt>) -> Self {
        let mut v = Self::new();
        v.add_label(label, coeff.into());
        v
    }

    pub fn add_label(&mut self, label: K0Label, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(label.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    pub fn add(&mut self, other: &K0Vector) {
        for (l, c) in &other.coeffs {
            self.add_label(l.clone(), c.clone());
        }
    }

    pub fn sub(&mut self, other: &K0Vector) {
        for (l, c) in &other.coeffs {
            self.add_label(l.clone(), -c.clone());
        }
    }

    pub fn coeff(&self, label: &K0Label) -> BigInt {
        self.coeffs.get(label).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K0Label, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Restriction to the Mu components (used by shape assertions).
    pub fn mu_part(&self) -> K0Vector {
        let mut out = K0Vector::new();
        for (l, c) in &self.coeffs {
            if matches!(l, K0Label::Mu { .. }) {
                out.add_label(l.clone(), c.clone());
            }
        }
        out
    }
}

impl FromIterator<(K0Label, BigInt)> for K0Vector {
    fn from_iter<T: IntoIterator<Item = (K0Label, BigInt)>>(iter: T) -> Self {
        let mut v = K0Vector::new();
        for (l, c) in iter {
            v.add_label(l, c);
        }
        v
    }
}
