use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{hnf, snf, IntMatrix};
use crate::{Error, Result};

/// Full or partial lattice in `ℤ^ambient`, spanned by the columns of
/// `basis`, which are required to be linearly independent over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
}

impl Lattice {
    pub fn new(basis: IntMatrix) -> Result<Self> {
        let rank = basis.rank();
        if rank != basis.cols() {
            return Err(Error::DimensionMismatch(format!(
                "lattice basis columns dependent: rank {} of {} columns",
                rank,
                basis.cols()
            )));
        }
        Ok(Self { ambient: basis.rows(), basis })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Canonical basis via column HNF; lattices are equal iff their
    /// canonical bases agree.
    pub fn canonical_basis(&self) -> IntMatrix {
        let (h, _) = hnf(&self.basis);
        // drop trailing zero columns (there are none for independent columns,
        // but keep the guard for safety)
        let keep: Vec<usize> = (0..h.cols())
            .filter(|&j| (0..h.rows()).any(|i| !h[(i, j)].is_zero()))
            .collect();
        IntMatrix::from_fn(h.rows(), keep.len(), |i, j| h[(i, keep[j])].clone())
    }

    pub fn same_lattice(&self, other: &Lattice) -> bool {
        self.ambient == other.ambient && self.canonical_basis() == other.canonical_basis()
    }
}

/// Integer coordinates of `x` in the basis of `l`, if `x` lies in `l`.
///
/// Solved through the Smith decomposition of the basis: with
/// `u·B·v = d`, `B·y = x` iff `d·(v⁻¹ y) = u·x`, which is solvable over ℤ
/// exactly when each transformed coordinate is divisible by the matching
/// diagonal entry and the coordinates beyond the rank vanish.
pub fn lattice_membership(x: &[BigInt], l: &Lattice) -> Result<Option<Vec<BigInt>>> {
    if x.len() != l.ambient {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} vs ambient rank {}",
            x.len(),
            l.ambient
        )));
    }
    let s = snf(&l.basis);
    let w = s.u.mul_vec(x)?;
    let k = l.basis.cols();
    let mut y = vec![BigInt::zero(); k];
    for i in 0..l.ambient {
        if i < k {
            let di = &s.d[(i, i)];
            if di.is_zero() {
                // cannot happen for independent columns, but be safe
                if !w[i].is_zero() {
                    return Ok(None);
                }
            } else {
                let (q, r) = w[i].div_rem(di);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            }
        } else if !w[i].is_zero() {
            return Ok(None);
        }
    }
    let coeffs = s.v.mul_vec(&y)?;
    debug_assert_eq!(l.basis.mul_vec(&coeffs).unwrap(), x.to_vec());
    Ok(Some(coeffs))
}

/// Saturation `{x : Nx ∈ l for some N > 0}` as a lattice; a direct summand
/// of the ambient lattice containing `l` with finite index.
pub fn saturate(l: &Lattice) -> Lattice {
    let s = snf(&l.basis);
    let r = s.rank();
    // u·B·v = d, so B·v = u⁻¹·d: the lattice is spanned by d_i · (u⁻¹ e_i);
    // its saturation by the u⁻¹ e_i themselves.
    let basis = IntMatrix::from_fn(l.ambient, r, |i, j| s.u_inv[(i, j)].clone());
    Lattice::new(basis).expect("columns of a unimodular matrix are independent")
}

/// Intersection of two lattices in the same ambient space.
pub fn lattice_intersection(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch("lattice intersection".into()));
    }
    // Solve B_a x = B_b y: kernel of [B_a | -B_b]; intersection basis is
    // B_a applied to the x-parts of a kernel basis.
    let (ka, kb) = (a.basis.cols(), b.basis.cols());
    let stacked = IntMatrix::from_fn(a.ambient, ka + kb, |i, j| {
        if j < ka {
            a.basis[(i, j)].clone()
        } else {
            -b.basis[(i, j - ka)].clone()
        }
    });
    let ker = kernel(&stacked);
    let xpart = IntMatrix::from_fn(ka, ker.cols(), |i, j| ker[(i, j)].clone());
    let gens = a.basis.mul(&xpart)?;
    // columns of gens span the intersection; canonicalize and drop dependents
    let (h, _) = hnf(&gens);
    let keep: Vec<usize> = (0..h.cols())
        .filter(|&j| (0..h.rows()).any(|i| !h[(i, j)].is_zero()))
        .collect();
    let basis = IntMatrix::from_fn(h.rows(), keep.len(), |i, j| h[(i, keep[j])].clone());
    Lattice::new(basis)
}

/// Basis of the integer kernel `{v : m·v = 0}` (columns). The basis is
/// saturated since it consists of columns of a unimodular matrix.
pub fn kernel(m: &IntMatrix) -> IntMatrix {
    let s = snf(m);
    let r = s.rank();
    let k = m.cols() - r;
    IntMatrix::from_fn(m.cols(), k, |i, j| s.v[(i, r + j)].clone())
}
