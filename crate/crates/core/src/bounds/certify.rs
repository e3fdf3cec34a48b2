//! Checking claimed bounds against the true optimum.

use super::assumptions::AssumptionReport;
use super::betas::BoundsReport;
use crate::greedy::GreedyTrace;
use crate::oracle::OptimumReport;
use serde::{Deserialize, Serialize};

/// Slack for comparing the true ratio against a bound: certification fails
/// only when the ratio falls more than this far below the bound's value.
pub const CERTIFICATION_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Beta1,
    Beta2,
    Stepwise,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Beta1 => "beta1",
            BoundKind::Beta2 => "beta2",
            BoundKind::Stepwise => "beta_stepwise",
        }
    }
}

/// One bound held up against the true greedy-to-optimal ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub bound: BoundKind,
    pub value: f64,
    /// Whether this instance verified the assumptions the bound relies on:
    /// feasibility along the greedy path (a1) and diminishing increments
    /// (a2) for all bounds; strictly positive increments (a3) additionally
    /// for `beta1` and the stepwise bound; `beta1` further requires
    /// curvature ≥ 1. Unsupported bounds are reported but cannot be
    /// falsified by this instance.
    pub supported: bool,
    /// `ratio − value`; negative means the bound overshoots the true ratio.
    pub margin: f64,
    /// Whether `ratio ≥ value − slack`.
    pub satisfied: bool,
}

/// Outcome of checking every reported bound against the oracle optimum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certification {
    pub greedy_value: f64,
    pub optimum_value: f64,
    /// `greedy_value / optimum_value`.
    pub ratio: f64,
    pub certificates: Vec<BoundCertificate>,
    /// False only when some *supported* bound is violated beyond the slack —
    /// which would falsify the theory the bound rests on, or reveal a bug.
    pub all_supported_satisfied: bool,
}

impl Certification {
    pub fn certificate(&self, bound: BoundKind) -> &BoundCertificate {
        self.certificates
            .iter()
            .find(|c| c.bound == bound)
            .expect("every bound kind is always present")
    }
}

/// Compares each bound to the true ratio `f(greedy) / f(optimum)` and
/// records, per bound: its value, whether its assumptions verified, and
/// whether the ratio honors it. Violations are data, not errors.
///
/// A nonpositive optimum value makes the ratio meaningless; every bound is
/// then marked unsupported so nothing can be (vacuously) falsified.
pub fn certify(
    trace: &GreedyTrace,
    optimum: &OptimumReport,
    bounds: &BoundsReport,
    assumptions: &AssumptionReport,
) -> Certification {
    let greedy_value = trace.greedy_value();
    let optimum_value = optimum.best_value;
    let ratio = greedy_value / optimum_value;
    let degenerate = !(optimum_value > 0.0);

    let a1 = assumptions.a1.holds();
    let a2 = assumptions.a2.holds();
    let a3 = assumptions.a3.holds();
    let entries = [
        (
            BoundKind::Beta1,
            bounds.beta1,
            a1 && a2 && a3 && !bounds.beta1_low_curvature,
        ),
        (BoundKind::Beta2, bounds.beta2, a1 && a2),
        (BoundKind::Stepwise, bounds.beta_stepwise, a1 && a2 && a3),
    ];

    let certificates: Vec<BoundCertificate> = entries
        .into_iter()
        .map(|(bound, value, supported)| BoundCertificate {
            bound,
            value,
            supported: supported && !degenerate,
            margin: ratio - value,
            satisfied: ratio >= value - CERTIFICATION_SLACK,
        })
        .collect();
    let all_supported_satisfied = certificates.iter().all(|c| !c.supported || c.satisfied);

    Certification {
        greedy_value,
        optimum_value,
        ratio,
        certificates,
        all_supported_satisfied,
    }
}
