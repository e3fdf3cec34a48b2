//! Performance bounds computable from the greedy trace, the assumptions
//! they rely on, and certification of both against the exhaustive oracle.
//!
//! The bounds come in two families:
//!
//! - constants that depend only on the horizon ([`bound_constants`]),
//! - trajectory bounds read off the recorded greedy trace: the curvature
//!   bound ([`bound_beta1`] via [`greedy_curvature`]), the singleton-sum
//!   bound ([`bound_beta2`]), and the per-step refinement
//!   ([`bound_stepwise`]).
//!
//! Each trajectory bound is only a guarantee when certain assumptions hold
//! on the instance; [`assumption_report`] checks them and [`certify`]
//! compares every bound against the true optimum.

mod assumptions;
mod betas;
mod certify;
mod curvature;
mod submodularity;

pub use assumptions::{
    assumption_report, check_a1, check_a2, check_a3, AssumptionCheck, AssumptionReport, Verdict,
    Witness, DEFAULT_TOLERANCE,
};
pub use betas::{
    beta1_value, beta2_denominator, bound_beta1, bound_beta2, bound_constants, bound_stepwise,
    bounds_report, BoundsError, BoundsReport,
};
pub use certify::{certify, BoundCertificate, BoundKind, Certification, CERTIFICATION_SLACK};
pub use curvature::{greedy_curvature, CurvatureError, CurvatureReport, StepCurvature};
pub use submodularity::{
    check_string_submodular, SubmodularityVerdict, SubmodularityWitness, ViolationKind,
};
