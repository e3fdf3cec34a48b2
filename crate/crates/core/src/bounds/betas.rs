//! The bound formulas and their assembly into a single report.

use super::curvature::CurvatureReport;
use crate::greedy::GreedyTrace;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Every performance-bound value computable for one greedy run. Each bound
/// is a lower bound on `greedy_value / optimum` — *when its assumptions
/// hold*; the report itself is purely descriptive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub horizon: usize,
    pub greedy_value: f64,
    /// 1 − e⁻¹, the classic horizon-independent constant.
    pub beta0: f64,
    /// 1 − ((K−1)/K)^K, the horizon-K sharpening of `beta0`.
    pub beta_nemhauser: f64,
    /// Greedy curvature the trajectory bounds are built from.
    pub alpha_g: f64,
    /// 1/K + (1/α_G)·(K−1)/K.
    pub beta1: f64,
    /// Set when `alpha_g < 1`. That regime signals an assumption violation
    /// upstream; `beta1` is still reported for descriptive comparison but
    /// must not be certified as a guarantee.
    pub beta1_low_curvature: bool,
    /// greedy_value / beta2_denominator.
    pub beta2: f64,
    /// Σ over steps of the best candidate singleton value at that step.
    pub beta2_denominator: f64,
    /// greedy_value / (first step value + Σ_{k≥2} α_k · Δ_k), the per-step
    /// refinement of the curvature bound.
    pub beta_stepwise: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    /// Curvature below 1 signals an assumption violation upstream; the
    /// formula value can still be had from [`beta1_value`].
    #[error("greedy curvature {0} is below 1, indicating an assumption violation upstream")]
    InvalidCurvature(f64),
    /// The bound's denominator is not positive, so the ratio is undefined.
    #[error("bound denominator {0} is not positive")]
    ZeroDenominator(f64),
}

/// The curvature bound `1/K + (1/alpha_g)·(K−1)/K`, guarded: curvature below
/// 1 is rejected. Strictly decreasing in `alpha_g`; equals 1 at
/// `alpha_g = 1`.
pub fn bound_beta1(alpha_g: f64, horizon: usize) -> Result<f64, BoundsError> {
    if alpha_g < 1.0 {
        return Err(BoundsError::InvalidCurvature(alpha_g));
    }
    Ok(beta1_value(alpha_g, horizon))
}

/// The curvature-bound formula without the guard, for descriptive reporting
/// alongside a warning flag.
pub fn beta1_value(alpha_g: f64, horizon: usize) -> f64 {
    let k = horizon as f64;
    1.0 / k + (1.0 / alpha_g) * (k - 1.0) / k
}

/// The greedy value divided by the sum over steps of the best candidate
/// singleton value, read entirely from the trace's candidate records.
pub fn bound_beta2(trace: &GreedyTrace) -> Result<f64, BoundsError> {
    let denominator = beta2_denominator(trace);
    if denominator <= 0.0 {
        return Err(BoundsError::ZeroDenominator(denominator));
    }
    Ok(trace.greedy_value() / denominator)
}

/// Σ over steps of the largest singleton value among that step's candidates.
pub fn beta2_denominator(trace: &GreedyTrace) -> f64 {
    (1..=trace.horizon())
        .map(|k| {
            trace
                .step_candidates(k)
                .iter()
                .map(|c| c.singleton)
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .sum()
}

/// The per-step refinement: the greedy value divided by
/// `values[1] + Σ_{k=2}^{K} alpha_k · increment_k`. With every `alpha_k`
/// equal this collapses to the plain curvature bound's denominator; where
/// later steps have smaller ratios it is tighter.
pub fn bound_stepwise(
    trace: &GreedyTrace,
    curvature: &CurvatureReport,
) -> Result<f64, BoundsError> {
    let mut denominator = trace.first_value();
    for step in &curvature.per_step {
        denominator += step.alpha * trace.increments[step.step - 1];
    }
    if denominator <= 0.0 {
        return Err(BoundsError::ZeroDenominator(denominator));
    }
    Ok(trace.greedy_value() / denominator)
}

/// The two horizon-only constants `(1 − e⁻¹, 1 − ((K−1)/K)^K)`. The second
/// is ≥ the first for every finite horizon and approaches it as the horizon
/// grows.
pub fn bound_constants(horizon: usize) -> (f64, f64) {
    let beta0 = 1.0 - (-1.0f64).exp();
    let k = horizon as f64;
    let beta_nemhauser = 1.0 - ((k - 1.0) / k).powi(horizon as i32);
    (beta0, beta_nemhauser)
}

/// Assembles every bound for one trace. Fails only when a trajectory
/// denominator is degenerate; low curvature is reported via
/// [`BoundsReport::beta1_low_curvature`] rather than an error so the report
/// stays useful on instances that violate assumptions.
pub fn bounds_report(
    trace: &GreedyTrace,
    curvature: &CurvatureReport,
) -> Result<BoundsReport, BoundsError> {
    let (beta0, beta_nemhauser) = bound_constants(trace.horizon());
    Ok(BoundsReport {
        horizon: trace.horizon(),
        greedy_value: trace.greedy_value(),
        beta0,
        beta_nemhauser,
        alpha_g: curvature.alpha_g,
        beta1: beta1_value(curvature.alpha_g, trace.horizon()),
        beta1_low_curvature: curvature.alpha_g < 1.0,
        beta2: bound_beta2(trace)?,
        beta2_denominator: beta2_denominator(trace),
        beta_stepwise: bound_stepwise(trace, curvature)?,
    })
}
