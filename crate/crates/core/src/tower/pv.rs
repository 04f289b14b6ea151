use super::{GradedGroup, GroupSummand};
use crate::linalg::{cokernel, IntMatrix};
use crate::{Error, Result};

/// Action of the crossed-product automorphism on the ℤ-block of one degree.
#[derive(Clone, Debug)]
pub enum ZAction {
    Identity,
    Matrix(IntMatrix),
}

/// Action on one degree: a rational diagonal `c^{-k}` on the ℚ-block (all
/// exponents ≥ 1, so id − β is invertible there) and a ℤ-block action.
#[derive(Clone, Debug)]
pub struct BlockAction {
    pub q_exponents: Vec<u64>,
    pub z_action: ZAction,
}

impl BlockAction {
    pub fn identity() -> Self {
        Self { q_exponents: vec![], z_action: ZAction::Identity }
    }
}

/// Degree-wise action descriptor for one Pimsner–Voiculescu step.
#[derive(Clone, Debug)]
pub struct PvAction {
    pub deg0: BlockAction,
    pub deg1: BlockAction,
}

impl PvAction {
    pub fn identity() -> Self {
        Self { deg0: BlockAction::identity(), deg1: BlockAction::identity() }
    }
}

/// Kernel and cokernel of `id − β` on one summand.
fn ker_coker(s: &GroupSummand, act: &BlockAction) -> Result<(GroupSummand, GroupSummand)> {
    if act.q_exponents.len() != s.q_rank {
        return Err(Error::ShapeMismatch(format!(
            "{} rational exponents for a ℚ-rank of {}",
            act.q_exponents.len(),
            s.q_rank
        )));
    }
    if act.q_exponents.iter().any(|&k| k == 0) {
        return Err(Error::ShapeMismatch(
            "rational diagonal entries must be proper powers c^{-k}, k ≥ 1".into(),
        ));
    }
    // id − c^{-k} is invertible on ℚ for k ≥ 1: no kernel, no cokernel.
    match &act.z_action {
        ZAction::Identity => {
            // id − id = 0: kernel and cokernel are the whole ℤ-block
            let part = GroupSummand::with_torsion(0, s.z_rank, s.torsion.clone());
            Ok((part.clone(), part))
        }
        ZAction::Matrix(mat) => {
            if !s.torsion.is_empty() {
                return Err(Error::ShapeMismatch(
                    "matrix actions on torsion summands are not supported".into(),
                ));
            }
            if mat.rows() != s.z_rank || mat.cols() != s.z_rank {
                return Err(Error::ShapeMismatch(format!(
                    "{}x{} action on a ℤ-rank of {}",
                    mat.rows(),
                    mat.cols(),
                    s.z_rank
                )));
            }
            let diff = IntMatrix::identity(s.z_rank).sub(mat)?;
            let ker_rank = s.z_rank - diff.rank();
            let coker = cokernel(&diff);
            Ok((
                GroupSummand::free(ker_rank),
                GroupSummand::with_torsion(0, coker.free_rank(), coker.torsion()),
            ))
        }
    }
}

/// One Pimsner–Voiculescu six-term step for a crossed product by ℤ:
/// `K₀' = coker(id−β₀) ⊕ ker(id−β₁)`, `K₁' = ker(id−β₀) ⊕ coker(id−β₁)`.
pub fn pv_step(k: &GradedGroup, act: &PvAction) -> Result<GradedGroup> {
    let (ker0, coker0) = ker_coker(&k.deg0, &act.deg0)?;
    let (ker1, coker1) = ker_coker(&k.deg1, &act.deg1)?;
    Ok(GradedGroup::new(coker0.direct_sum(&ker1), ker0.direct_sum(&coker1)))
}

/// Apply `j` identity-action PV steps starting from the first-step output
/// `(ℤ^t, ℤ^t)`: each step sets `K_* ← K_* ⊕ K_{*+1}` (exterior-algebra
/// bookkeeping), doubling both ranks.
pub fn gamma_tower(k0: &GradedGroup, j: u64) -> Result<GradedGroup> {
    if k0.deg0.q_rank != 0 || k0.deg1.q_rank != 0 || !k0.is_torsion_free() {
        return Err(Error::ShapeMismatch(
            "gamma tower starts from the free first-step output".into(),
        ));
    }
    let mut cur = k0.clone();
    for _ in 0..j {
        let next = pv_step(&cur, &PvAction::identity())?;
        // doubling bookkeeping
        debug_assert_eq!(next.deg0.z_rank, cur.deg0.z_rank + cur.deg1.z_rank);
        debug_assert_eq!(next.deg1.z_rank, cur.deg0.z_rank + cur.deg1.z_rank);
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn betac_shape_collapses_rational_part() {
        // (Q^a ⊕ Z^m, 0) with c^{-n} diagonal and identity on Z^m
        for a in 0..4usize {
            for m in 1..6usize {
                let k = GradedGroup::new(GroupSummand::mixed(a, m), GroupSummand::zero());
                let act = PvAction {
                    deg0: BlockAction { q_exponents: vec![2; a], z_action: ZAction::Identity },
                    deg1: BlockAction::identity(),
                };
                let out = pv_step(&k, &act).unwrap();
                assert_eq!(out.deg0, GroupSummand::free(m));
                assert_eq!(out.deg1, GroupSummand::free(m));
            }
        }
    }

    #[test]
    fn identity_action_doubles() {
        let k = GradedGroup::new(GroupSummand::free(3), GroupSummand::free(2));
        let out = pv_step(&k, &PvAction::identity()).unwrap();
        assert_eq!(out.deg0, GroupSummand::free(5));
        assert_eq!(out.deg1, GroupSummand::free(5));
    }

    #[test]
    fn doubling_action_kills_z() {
        // β = 2·id on (Z, 0): id − β = −1, so kernel and cokernel vanish
        let k = GradedGroup::new(GroupSummand::free(1), GroupSummand::zero());
        let act = PvAction {
            deg0: BlockAction {
                q_exponents: vec![],
                z_action: ZAction::Matrix(IntMatrix::from_rows_i64(&[&[2]])),
            },
            deg1: BlockAction::identity(),
        };
        let out = pv_step(&k, &act).unwrap();
        assert!(out.deg0.is_zero());
        assert!(out.deg1.is_zero());
    }

    #[test]
    fn torsion_from_matrix_action() {
        // β = [[1,0],[3,−1]]-ish: id − β has nontrivial cokernel
        let k = GradedGroup::new(GroupSummand::free(2), GroupSummand::zero());
        let beta = IntMatrix::from_rows_i64(&[&[1, 0], &[0, -2]]);
        let act = PvAction {
            deg0: BlockAction { q_exponents: vec![], z_action: ZAction::Matrix(beta) },
            deg1: BlockAction::identity(),
        };
        let out = pv_step(&k, &act).unwrap();
        // id − β = diag(0, 3): ker = Z, coker = Z ⊕ Z/3
        assert_eq!(out.deg0.z_rank, 1);
        assert_eq!(out.deg0.torsion, vec![BigInt::from(3)]);
        assert_eq!(out.deg1, GroupSummand::free(1));
    }

    #[test]
    fn euler_characteristic_balance() {
        // rank K₀' − rank K₁' = 0 whenever id − β is square
        let k = GradedGroup::new(GroupSummand::mixed(2, 3), GroupSummand::free(4));
        let act = PvAction {
            deg0: BlockAction { q_exponents: vec![1, 3], z_action: ZAction::Identity },
            deg1: BlockAction {
                q_exponents: vec![],
                z_action: ZAction::Matrix(IntMatrix::from_rows_i64(&[
                    &[0, 1, 0, 0],
                    &[1, 0, 0, 0],
                    &[0, 0, 2, 0],
                    &[0, 0, 0, 1],
                ])),
            },
        };
        let out = pv_step(&k, &act).unwrap();
        assert_eq!(
            out.deg0.rational_rank() as i64 - out.deg1.rational_rank() as i64,
            0
        );
    }

    #[test]
    fn gamma_tower_ranks() {
        let k0 = GradedGroup::new(GroupSummand::free(4), GroupSummand::free(4));
        assert_eq!(gamma_tower(&k0, 0).unwrap(), k0);
        let k2 = gamma_tower(&k0, 2).unwrap();
        assert_eq!(k2.deg0, GroupSummand::free(16));
        assert_eq!(k2.deg1, GroupSummand::free(16));
        let k0 = GradedGroup::new(GroupSummand::free(2), GroupSummand::free(2));
        let k1 = gamma_tower(&k0, 1).unwrap();
        assert_eq!(k1.deg0, GroupSummand::free(4));
    }
}
