//! Greedy curvature: how far short of its standalone value a candidate's
//! marginal contribution falls along the greedy path.

use crate::greedy::GreedyTrace;
use crate::string::Symbol;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The worst candidate ratio at one greedy step: among the step's candidates
/// with strictly positive increment, the largest `singleton / increment`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepCurvature {
    /// 1-based greedy step; always ≥ 2, since the first step has no prior
    /// prefix for a candidate to be measured against.
    pub step: usize,
    pub alpha: f64,
    /// The candidate attaining the maximum (smallest symbol id on ties).
    pub symbol: Symbol,
}

/// Curvature of a completed greedy trace. `alpha_g` is the maximum of the
/// per-step ratios; a larger value means some candidate's marginal gain lags
/// its standalone value more severely, which weakens the curvature bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub alpha_g: f64,
    /// Per-step maxima for steps `2..=K`, in step order.
    pub per_step: Vec<StepCurvature>,
    /// The step and symbol attaining `alpha_g` (earliest step on ties);
    /// `None` only for one-step traces.
    pub attaining: Option<StepCurvature>,
    /// Number of candidates skipped because their increment was ≤ 0. Such
    /// candidates have no defined ratio; a nonzero count means the
    /// positive-increment assumption fails somewhere.
    pub excluded_candidates: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurvatureError {
    /// A step at or after 2 had no candidate with positive increment, so its
    /// ratio — and with it the curvature — is undefined.
    #[error("no candidate with positive increment at step {0}")]
    NoPositiveIncrement(usize),
}

/// Computes the greedy curvature purely from the trace's candidate records:
/// no objective evaluations are performed.
///
/// A one-step trace has no step ≥ 2 to measure; its curvature is taken to
/// be 1, under which every downstream bound formula collapses to 1 — the
/// correct answer, since a single greedy step is optimal among singletons.
pub fn greedy_curvature(trace: &GreedyTrace) -> Result<CurvatureReport, CurvatureError> {
    let mut per_step = Vec::new();
    let mut excluded = 0usize;
    for step in 2..=trace.horizon() {
        let mut best: Option<StepCurvature> = None;
        for candidate in trace.step_candidates(step) {
            if candidate.increment > 0.0 {
                let alpha = candidate.singleton / candidate.increment;
                if best.is_none_or(|b| alpha > b.alpha) {
                    best = Some(StepCurvature { step, alpha, symbol: candidate.symbol });
                }
            } else {
                excluded += 1;
            }
        }
        per_step.push(best.ok_or(CurvatureError::NoPositiveIncrement(step))?);
    }

    let attaining = per_step
        .iter()
        .copied()
        .fold(None, |acc: Option<StepCurvature>, step| match acc {
            Some(best) if best.alpha >= step.alpha => Some(best),
            _ => Some(step),
        });
    Ok(CurvatureReport {
        alpha_g: attaining.map_or(1.0, |a| a.alpha),
        per_step,
        attaining,
        excluded_candidates: excluded,
    })
}
