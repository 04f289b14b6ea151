//! Direct limits over the admissible divisibility system, the
//! Pimsner–Voiculescu steps, the Γ-tower, and the final graded K-theory
//! reports.

mod graded;
mod telescope;
mod pv;
mod pipeline;

pub use graded::{GradedGroup, GroupSummand};
pub use telescope::{telescope_colimit, DiagClass, TelescopeSystem, TriangularCertificate};
pub use pv::{gamma_tower, pv_step, BlockAction, PvAction, ZAction};
pub use pipeline::{
    betac_action, eta_telescope_system, full_k_theory, group_algebra_k, subalgebra_k,
    FinalFormula, KTheoryOutcome, TowerSpec,
};
