//! Typed report structures with deterministic JSON serialization: field
//! order is fixed by declaration, arbitrary-precision values are decimal
//! strings, and all listings use the crate's canonical orderings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::eta::{inf_ranks, EtaContext, EtaMatrix};
use crate::field::{real_places, verify_mu_maximality, MuMaximality, Order};
use crate::semidirect::FiniteSubgroupLabel;
use crate::tower::{full_k_theory, group_algebra_k, GradedGroup, GroupSummand, TowerSpec};
use crate::Result;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FieldInfo {
    pub name: String,
    pub degree: usize,
    pub m: u64,
    pub real_places: usize,
    pub admissibility_modulus: Vec<String>,
    pub mu_maximality: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ClassInfo {
    pub i: u64,
    pub rep: Vec<String>,
    pub subgroup_order: u64,
    pub is_mu: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SummandInfo {
    pub q_rank: usize,
    pub z_rank: usize,
    pub torsion: Vec<String>,
    pub display: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GradedInfo {
    pub deg0: SummandInfo,
    pub deg1: SummandInfo,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct EtaInfo {
    pub c: String,
    pub basis: Vec<String>,
    pub finite_block: Vec<Vec<String>>,
    pub inf_diagonal: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AnalyzeReport {
    pub field: FieldInfo,
    pub maximal_classes: Vec<ClassInfo>,
    pub inf_ranks: Vec<[u64; 2]>,
    pub delta: u8,
    pub k0_rank: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct KTheoryReport {
    pub field: FieldInfo,
    pub target: String,
    pub c: String,
    pub truncation_depth: u64,
    pub maximal_classes: Vec<ClassInfo>,
    pub inf_ranks: Vec<[u64; 2]>,
    pub delta: u8,
    pub eta: Option<EtaInfo>,
    pub subalgebra_k: GradedInfo,
    pub pv_first: GradedInfo,
    pub truncations: Vec<GradedInfo>,
    pub final_formula: String,
    pub theorem_paths_agree: Option<bool>,
    pub classification_note: String,
    pub invariant_suite_passed: bool,
}

fn summand_info(s: &GroupSummand) -> SummandInfo {
    SummandInfo {
        q_rank: s.q_rank,
        z_rank: s.z_rank,
        torsion: s.torsion.iter().map(|d| d.to_string()).collect(),
        display: s.display(),
    }
}

fn graded_info(g: &GradedGroup) -> GradedInfo {
    GradedInfo { deg0: summand_info(&g.deg0), deg1: summand_info(&g.deg1) }
}

fn class_info(order: &Order, l: &FiniteSubgroupLabel) -> ClassInfo {
    ClassInfo {
        i: l.i,
        rep: l.rep.coords.iter().map(|c| c.to_string()).collect(),
        subgroup_order: l.subgroup_order(order),
        is_mu: l.is_mu(),
    }
}

fn eta_info(eta: &EtaMatrix) -> EtaInfo {
    EtaInfo {
        c: eta.c.to_string(),
        basis: eta.basis.iter().map(|l| l.display()).collect(),
        finite_block: eta.finite_block.to_string_rows(),
        inf_diagonal: eta.inf_diagonal_strings(),
    }
}

fn field_info(order: &Order) -> FieldInfo {
    let verdict = match verify_mu_maximality(order) {
        MuMaximality::Verified => "verified",
        MuMaximality::NecessaryConditionsPass => "necessary-conditions-pass",
        MuMaximality::Failed => "failed",
    };
    FieldInfo {
        name: order.name().to_string(),
        degree: order.degree(),
        m: order.root_order(),
        real_places: real_places(order.poly()),
        admissibility_modulus: order
            .admissibility_modulus()
            .coords
            .iter()
            .map(|c| c.to_string())
            .collect(),
        mu_maximality: verdict.to_string(),
    }
}

pub fn analyze_report(order: &Order) -> Result<AnalyzeReport> {
    let ctx = EtaContext::new(order)?;
    Ok(AnalyzeReport {
        field: field_info(order),
        maximal_classes: ctx.classes().iter().map(|l| class_info(order, l)).collect(),
        inf_ranks: inf_ranks(order)?.iter().map(|&(k, d)| [k, d]).collect(),
        delta: crate::eta::delta(order),
        k0_rank: ctx.k0_rank()?,
    })
}

const CLASSIFICATION_NOTE: &str = "All ring C*-algebras of rings of integers share this K-theory; \
by the Kirchberg-Phillips classification (UCT Kirchberg algebras, trivial unit class) they are \
pairwise isomorphic.";

pub fn ktheory_report(order: &Order, c: &BigInt, truncation: u64) -> Result<KTheoryReport> {
    let ctx = EtaContext::new(order)?;
    let eta = ctx.eta_matrix(c)?;
    let spec = TowerSpec { c: c.clone(), truncation };
    let outcome = full_k_theory(order, &spec)?;
    let invariant_suite_passed = run_invariant_suite(order, &ctx, c).is_ok();
    Ok(KTheoryReport {
        field: field_info(order),
        target: "ring-cstar".into(),
        c: c.to_string(),
        truncation_depth: truncation,
        maximal_classes: ctx.classes().iter().map(|l| class_info(order, l)).collect(),
        inf_ranks: inf_ranks(order)?.iter().map(|&(k, d)| [k, d]).collect(),
        delta: crate::eta::delta(order),
        eta: Some(eta_info(&eta)),
        subalgebra_k: graded_info(&outcome.subalgebra),
        pv_first: graded_info(&outcome.pv_first),
        truncations: outcome.truncations.iter().map(graded_info).collect(),
        final_formula: outcome.formula.display(),
        theorem_paths_agree: outcome.theorem1_agrees,
        classification_note: CLASSIFICATION_NOTE.into(),
        invariant_suite_passed,
    })
}

pub fn group_algebra_report(order: &Order, truncation: u64) -> Result<KTheoryReport> {
    let ctx = EtaContext::new(order)?;
    let outcome = group_algebra_k(order, truncation)?;
    Ok(KTheoryReport {
        field: field_info(order),
        target: "group-cstar".into(),
        c: "-".into(),
        truncation_depth: truncation,
        maximal_classes: ctx.classes().iter().map(|l| class_info(order, l)).collect(),
        inf_ranks: inf_ranks(order)?.iter().map(|&(k, d)| [k, d]).collect(),
        delta: crate::eta::delta(order),
        eta: None,
        subalgebra_k: graded_info(&outcome.subalgebra),
        pv_first: graded_info(&outcome.pv_first),
        truncations: outcome.truncations.iter().map(graded_info).collect(),
        final_formula: outcome.formula.display(),
        theorem_paths_agree: outcome.theorem1_agrees,
        classification_note: CLASSIFICATION_NOTE.into(),
        invariant_suite_passed: true,
    })
}

/// Cheap internal cross-checks recorded in the report: the Molien identity
/// and the cycle-length lemma for every finite class at the given modulus.
fn run_invariant_suite(order: &Order, ctx: &EtaContext, c: &BigInt) -> Result<()> {
    let (lhs, rhs) = crate::eta::molien_alternating_sum(order)?;
    if lhs != rhs {
        return Err(crate::Error::InvariantViolation("Molien identity".into()));
    }
    for label in ctx.classes() {
        if label.is_mu() {
            continue;
        }
        let census = ctx.fin_cycle_census(c, label)?;
        if !census.all_full {
            return Err(crate::Error::InvariantViolation("cycle census".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::field::load_field;

    #[test]
    fn reports_are_deterministic() {
        let o = load_field(&builtin::gaussian()).unwrap();
        let r1 = ktheory_report(&o, &BigInt::from(4), 2).unwrap();
        let r2 = ktheory_report(&o, &BigInt::from(4), 2).unwrap();
        let s1 = serde_json::to_string_pretty(&r1).unwrap();
        let s2 = serde_json::to_string_pretty(&r2).unwrap();
        assert_eq!(s1, s2, "byte-identical JSON");
        // lossless round trip
        let back: KTheoryReport = serde_json::from_str(&s1).unwrap();
        assert_eq!(back, r1);
    }

    #[test]
    fn analyze_fields() {
        let o = load_field(&builtin::rationals()).unwrap();
        let r = analyze_report(&o).unwrap();
        assert_eq!(r.field.degree, 1);
        assert_eq!(r.field.m, 2);
        assert_eq!(r.field.real_places, 1);
        assert_eq!(r.field.mu_maximality, "verified");
    }
}
