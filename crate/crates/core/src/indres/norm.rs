use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::FiniteGroup;
use crate::linalg::{cokernel, kernel, lattice_membership, IntMatrix, Lattice};
use crate::{Error, Result};

/// Result of the norm-map annihilation check on an integer F-module: the
/// norm `N = Σ_g A_g` maps coinvariants to invariants; kernel and cokernel
/// must be killed by |F|.
#[derive(Clone, Debug)]
pub struct NormReport {
    pub kernel_ok: bool,
    pub cokernel_ok: bool,
    pub kernel_invariants: Vec<BigInt>,
    pub cokernel_invariants: Vec<BigInt>,
}

impl NormReport {
    pub fn both_ok(&self) -> bool {
        self.kernel_ok && self.cokernel_ok
    }
}

/// Check |F|·ker = 0 and |F|·coker = 0 for the norm map
/// `ℤ ⊗_{ℤF} M → M^F` of the representation given by one integer matrix
/// per group element.
pub fn norm_annihilation_check(
    group: &FiniteGroup,
    action: &[IntMatrix],
) -> Result<NormReport> {
    let ord = group.order();
    if action.len() != ord {
        return Err(Error::NotARepresentation(format!(
            "{} matrices for a group of order {ord}",
            action.len()
        )));
    }
    let r = action[0].rows();
    for a in action {
        if a.rows() != r || a.cols() != r {
            return Err(Error::NotARepresentation("non-square or ragged action".into()));
        }
    }
    if !action[group.identity()].is_identity() {
        return Err(Error::NotARepresentation("identity must act trivially".into()));
    }
    for a in 0..ord {
        for b in 0..ord {
            if action[a].mul(&action[b])? != action[group.mul(a, b)] {
                return Err(Error::NotARepresentation(format!(
                    "A_{a}·A_{b} ≠ A_({a}·{b})"
                )));
            }
        }
    }

    let identity = IntMatrix::identity(r);
    // invariants: common kernel of the stacked (A_g − I)
    let stacked_v = IntMatrix::from_fn(ord * r, r, |i, j| {
        let (g, row) = (i / r, i % r);
        let diff = &action[g][(row, j)];
        if row == j {
            diff - BigInt::from(1)
        } else {
            diff.clone()
        }
    });
    let inv_basis = kernel(&stacked_v);
    let s = inv_basis.cols();

    // coinvariant relations: columns (A_g − I)·e_j for all g, j
    let relations = IntMatrix::from_fn(r, ord * r, |i, col| {
        let (g, j) = (col / r, col % r);
        let v = &action[g][(i, j)];
        if i == j {
            v - BigInt::from(1)
        } else {
            v.clone()
        }
    });

    // norm matrix and its expression in invariant coordinates
    let mut norm = IntMatrix::zero(r, r);
    for a in action {
        norm = norm.add(a)?;
    }
    let _ = identity;
    let inv_lattice = if s > 0 { Some(Lattice::new(inv_basis.clone())?) } else { None };
    let mut cmat = IntMatrix::zero(s, r);
    for j in 0..r {
        let nej = norm.col(j);
        if let Some(l) = &inv_lattice {
            let coords = lattice_membership(&nej, l)?.ok_or_else(|| {
                Error::InvariantViolation("norm image is not invariant".into())
            })?;
            for i in 0..s {
                cmat[(i, j)] = coords[i].clone();
            }
        } else if nej.iter().any(|x| !x.is_zero()) {
            return Err(Error::InvariantViolation(
                "norm image nonzero with trivial invariants".into(),
            ));
        }
    }

    let f_order = BigInt::from(ord);

    // cokernel of the induced map: ℤ^s / im(C)
    let coker = cokernel(&cmat);
    let cokernel_invariants = coker.torsion();
    let cokernel_ok = coker.free_rank() == 0
        && cokernel_invariants
            .iter()
            .all(|d| f_order.mod_floor(d).is_zero());

    // kernel of the induced map: ker(C) / im(relations); im(relations) lies
    // inside ker(C) since N·(A_g − I) = 0
    let ker_lattice = kernel(&cmat);
    let kq = ker_lattice.cols();
    let (kernel_ok, kernel_invariants) = if kq == 0 {
        (true, vec![])
    } else {
        let kl = Lattice::new(ker_lattice)?;
        let mut rel_coords = Vec::new();
        for col in 0..relations.cols() {
            let v = relations.col(col);
            let coords = lattice_membership(&v, &kl)?.ok_or_else(|| {
                Error::InvariantViolation("coinvariant relation outside ker(norm)".into())
            })?;
            rel_coords.push(coords);
        }
        let rel_mat = IntMatrix::from_fn(kq, rel_coords.len(), |i, j| rel_coords[j][i].clone());
        let kergrp = cokernel(&rel_mat);
        let torsion = kergrp.torsion();
        let ok = kergrp.free_rank() == 0
            && torsion.iter().all(|d| f_order.mod_floor(d).is_zero());
        (ok, torsion)
    };

    Ok(NormReport { kernel_ok, cokernel_ok, kernel_invariants, cokernel_invariants })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_action_on_z2() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let action = vec![
            IntMatrix::identity(2),
            IntMatrix::from_rows_i64(&[&[0, 1], &[1, 0]]),
        ];
        let r = norm_annihilation_check(&g, &action).unwrap();
        assert!(r.both_ok());
        assert!(r.kernel_invariants.is_empty());
    }

    #[test]
    fn trivial_action() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let action = vec![IntMatrix::identity(2); 3];
        let r = norm_annihilation_check(&g, &action).unwrap();
        // N = 3·id: kernel 0, cokernel (Z/3)²
        assert!(r.both_ok());
        assert_eq!(r.cokernel_invariants, vec![BigInt::from(3), BigInt::from(3)]);
    }

    #[test]
    fn cyclic_permutation_on_z3() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let rot = IntMatrix::from_rows_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let action = vec![IntMatrix::identity(3), rot.clone(), rot.mul(&rot).unwrap()];
        let r = norm_annihilation_check(&g, &action).unwrap();
        assert!(r.both_ok());
    }

    #[test]
    fn sign_action_kills_invariants() {
        // F = Z/2 acting by −1 on Z: invariants 0, coinvariants Z/2
        let g = FiniteGroup::cyclic(2).unwrap();
        let action = vec![
            IntMatrix::identity(1),
            IntMatrix::from_rows_i64(&[&[-1]]),
        ];
        let r = norm_annihilation_check(&g, &action).unwrap();
        assert!(r.both_ok());
        assert_eq!(r.kernel_invariants, vec![BigInt::from(2)]);
    }

    #[test]
    fn non_representation_rejected() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let action = vec![
            IntMatrix::identity(1),
            IntMatrix::from_rows_i64(&[&[2]]),
        ];
        assert!(matches!(
            norm_annihilation_check(&g, &action),
            Err(Error::NotARepresentation(_))
        ));
    }
}
