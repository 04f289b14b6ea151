use num_bigint::BigInt;

use super::{
    gamma_tower, pv_step, telescope_colimit, BlockAction, DiagClass, GradedGroup, GroupSummand,
    PvAction, TelescopeSystem, TriangularCertificate, ZAction,
};
use crate::eta::{delta, inf_ranks, EtaContext, EtaMatrix, K0Label};
use crate::field::{real_places, Order};
use crate::linalg::IntMatrix;
use crate::{Error, Result};

/// Base modulus and symbolic-tower truncation depth.
#[derive(Clone, Debug)]
pub struct TowerSpec {
    pub c: BigInt,
    pub truncation: u64,
}

/// The final graded answer: `ℤ^rank ⊗ Λ(Γ)` or plain `Λ(Γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FinalFormula {
    TensorLambda { rank: u64 },
    Lambda,
}

impl FinalFormula {
    pub fn display(&self) -> String {
        match self {
            FinalFormula::TensorLambda { rank } => format!("Z^{rank} (x) Lambda(Gamma)"),
            FinalFormula::Lambda => "Lambda(Gamma)".to_string(),
        }
    }

    /// Graded ranks of the truncation at Γ_j (j+1 free generators).
    pub fn truncated_ranks(&self, j: u64) -> (u64, u64) {
        let half = 1u64 << j;
        match self {
            FinalFormula::TensorLambda { rank } => (rank * half, rank * half),
            FinalFormula::Lambda => (half, half),
        }
    }
}

/// Everything the pipeline produces for one field and modulus.
#[derive(Clone, Debug)]
pub struct KTheoryOutcome {
    pub formula: FinalFormula,
    pub subalgebra: GradedGroup,
    pub pv_first: GradedGroup,
    /// Tower truncations Γ_0 … Γ_j from iterated PV steps.
    pub truncations: Vec<GradedGroup>,
    /// For m > 2: whether the higher-roots path and the real-places case
    /// split produced identical graded data.
    pub theorem1_agrees: Option<bool>,
}

/// Build the telescope system of an η-matrix: the finite block extended by
/// the rational infinite diagonal, with its triangular certificate.
pub fn eta_telescope_system(order: &Order, eta: &EtaMatrix) -> Result<TelescopeSystem> {
    let n = order.degree() as u64;
    let nb = eta.basis.len();
    let total = nb + eta.inf_exponents.len();
    let mut mat = IntMatrix::zero(total, total);
    for i in 0..nb {
        for j in 0..nb {
            mat[(i, j)] = eta.finite_block[(i, j)].clone();
        }
    }
    let mut diag = Vec::with_capacity(total);
    for label in &eta.basis {
        diag.push(match label {
            K0Label::Unit => DiagClass::CPower(n),
            K0Label::Fin { .. } => DiagClass::Nilpotent,
            K0Label::Mu { .. } => DiagClass::Unit,
            K0Label::Inf { .. } => {
                return Err(Error::InvariantViolation(
                    "inf label in the finite basis".into(),
                ))
            }
        });
    }
    for (t, &e) in eta.inf_exponents.iter().enumerate() {
        let pos = nb + t;
        mat[(pos, pos)] = eta.c.pow(e as u32);
        diag.push(if e == 0 { DiagClass::Unit } else { DiagClass::CPower(e) });
    }
    TelescopeSystem::certified(mat, TriangularCertificate { c: eta.c.clone(), diag })
}

/// K of the sub-C*-algebra generated by the torus part, s_ζ and all range
/// projections: `(ℚ^{rk−δ} ⊕ ℤ^δ ⊕ ℤ^{m−1}, 0)`. The closed form is
/// cross-checked against the telescope colimit of the computed η-matrix.
pub fn subalgebra_k(order: &Order, c: &BigInt) -> Result<GradedGroup> {
    if !order.is_admissible(c)? {
        return Err(Error::NotAdmissible { c: c.clone() });
    }
    let total: u64 = inf_ranks(order)?.iter().map(|(_, d)| d).sum();
    let d = u64::from(delta(order));
    let m = order.root_order();
    let closed = GradedGroup::new(
        GroupSummand::mixed((total - d) as usize, (d + m - 1) as usize),
        GroupSummand::zero(),
    );
    let ctx = EtaContext::new(order)?;
    let eta = ctx.eta_matrix(c)?;
    let sys = eta_telescope_system(order, &eta)?;
    let tele = telescope_colimit(&sys, true)?;
    if tele != closed {
        return Err(Error::InvariantViolation(format!(
            "telescope colimit {} disagrees with the closed form {}",
            tele.display(),
            closed.display()
        )));
    }
    Ok(closed)
}

/// The multiplication-by-c action on the subalgebra K: `c^{-k}` on each
/// rational direction (the unit contributes c^{-n}), identity on the
/// ℤ-block.
pub fn betac_action(order: &Order) -> Result<PvAction> {
    let n = order.degree() as u64;
    let mut q_exponents = vec![n];
    for (k, d) in inf_ranks(order)? {
        if k == 0 {
            continue;
        }
        let e = n - k;
        if e >= 1 {
            q_exponents.extend(std::iter::repeat(e).take(d as usize));
        }
    }
    Ok(PvAction {
        deg0: BlockAction { q_exponents, z_action: ZAction::Identity },
        deg1: BlockAction::identity(),
    })
}

/// Full pipeline: subalgebra K, one PV step for ⟨c⟩, the Γ-tower
/// truncations, and the symbolic final formula with the case split on the
/// number of real places. For m > 2 the higher-roots path is computed
/// independently and compared.
pub fn full_k_theory(order: &Order, spec: &TowerSpec) -> Result<KTheoryOutcome> {
    let m = order.root_order();
    let real = real_places(order.poly());
    let formula = if real % 2 == 0 {
        FinalFormula::TensorLambda { rank: m }
    } else {
        FinalFormula::Lambda
    };

    let subalgebra = subalgebra_k(order, &spec.c)?;
    let pv_first = pv_step(&subalgebra, &betac_action(order)?)?;
    let expected_rank = u64::from(delta(order)) + m - 1;
    let expect = GradedGroup::new(
        GroupSummand::free(expected_rank as usize),
        GroupSummand::free(expected_rank as usize),
    );
    if pv_first != expect {
        return Err(Error::InvariantViolation(format!(
            "first PV step gave {}, expected {}",
            pv_first.display(),
            expect.display()
        )));
    }

    let mut truncations = Vec::with_capacity(spec.truncation as usize + 1);
    for t in 0..=spec.truncation {
        truncations.push(gamma_tower(&pv_first, t)?);
    }

    // Case-split consistency for higher roots of unity: the dedicated path
    // (rank of the representation ring of μ, tower by iterated PV) must
    // match the real-places branch (closed form).
    let theorem1_agrees = if m > 2 {
        let mu_rank = crate::indres::cyclic_irreducible_count(m)?;
        let t1_formula = FinalFormula::TensorLambda { rank: mu_rank };
        let mut agree = t1_formula == formula;
        for (t, tr) in truncations.iter().enumerate() {
            let (r0, r1) = formula.truncated_ranks(t as u64);
            agree &= tr.deg0 == GroupSummand::free(r0 as usize)
                && tr.deg1 == GroupSummand::free(r1 as usize);
        }
        Some(agree)
    } else {
        None
    };

    Ok(KTheoryOutcome { formula, subalgebra, pv_first, truncations, theorem1_agrees })
}

/// K of the full group C*-algebra of `K ⋊ K^×`: the same graded formula
/// `ℤ^m ⊗ Λ(Γ)` for every number field.
pub fn group_algebra_k(order: &Order, truncation: u64) -> Result<KTheoryOutcome> {
    let m = order.root_order();
    let formula = FinalFormula::TensorLambda { rank: m };
    let base = GradedGroup::new(
        GroupSummand::free(m as usize),
        GroupSummand::free(m as usize),
    );
    let mut truncations = Vec::with_capacity(truncation as usize + 1);
    for t in 0..=truncation {
        truncations.push(gamma_tower(&base, t)?);
    }
    Ok(KTheoryOutcome {
        formula,
        subalgebra: base.clone(),
        pv_first: base,
        truncations,
        theorem1_agrees: None,
    })
}
