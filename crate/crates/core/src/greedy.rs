//! The greedy solver and the per-step trace it records.

use crate::constraint::PrefixClosedConstraint;
use crate::objective::{ObjectiveError, StringObjective};
use crate::string::{ActionString, Symbol};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One feasible extension examined at a greedy step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub symbol: Symbol,
    /// Value of the length-one string `(symbol)`.
    pub singleton: f64,
    /// Value of the current prefix with `symbol` appended.
    pub extension: f64,
    /// `extension` minus the value of the current prefix.
    pub increment: f64,
}

/// Everything the greedy solver saw while building its solution. All bound
/// computations in this crate read only this trace; none of them re-run the
/// objective.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GreedyTrace {
    /// The greedy string, one symbol per step.
    pub chosen: ActionString,
    /// Objective value of each prefix of `chosen`; entry 0 is the value of
    /// the empty string, entry `k` the value after step `k`. Length is
    /// `chosen.len() + 1`.
    pub values: Vec<f64>,
    /// `values[k] − values[k−1]` for each step, recorded at selection time.
    pub increments: Vec<f64>,
    /// Every candidate examined at each step, in ascending symbol order.
    /// Entry `k − 1` holds the candidates of step `k`.
    pub candidates: Vec<Vec<Candidate>>,
}

impl GreedyTrace {
    /// Number of completed steps.
    pub fn horizon(&self) -> usize {
        self.chosen.len()
    }

    /// Final objective value `f` of the greedy string.
    pub fn greedy_value(&self) -> f64 {
        *self.values.last().expect("trace always records the empty prefix")
    }

    /// Value after the first step, i.e. of the best singleton.
    pub fn first_value(&self) -> f64 {
        self.values[1]
    }

    /// Candidates examined at step `k` (1-based).
    pub fn step_candidates(&self, k: usize) -> &[Candidate] {
        &self.candidates[k - 1]
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    /// Objective and constraint disagree on the maximum string length.
    #[error("objective horizon {objective} does not match constraint horizon {constraint}")]
    HorizonMismatch { objective: usize, constraint: usize },
    /// The constraint offered no extension before the horizon was reached.
    /// Carries the trace of the steps that did complete.
    #[error("no feasible extension at step {step}")]
    EmptyCandidateSet { step: usize, partial: Box<GreedyTrace> },
    #[error(transparent)]
    Objective(#[from] ObjectiveError),
}

/// Builds a string one symbol at a time, appending at each step the feasible
/// extension with the highest resulting objective value. Ties go to the
/// smallest symbol id, so the result is deterministic. Singleton values are
/// evaluated once per symbol and cached for the returned trace.
pub fn greedy_solve<O, C>(objective: &O, constraint: &C) -> Result<GreedyTrace, SolveError>
where
    O: StringObjective + ?Sized,
    C: PrefixClosedConstraint + ?Sized,
{
    if objective.horizon() != constraint.horizon() {
        return Err(SolveError::HorizonMismatch {
            objective: objective.horizon(),
            constraint: constraint.horizon(),
        });
    }
    let horizon = constraint.horizon();

    let mut singleton_cache: Vec<Option<f64>> = vec![None; objective.ground_size()];
    let mut singleton_of = |symbol: Symbol| -> Result<f64, ObjectiveError> {
        match singleton_cache[symbol.index()] {
            Some(v) => Ok(v),
            None => {
                let v = objective.evaluate(&ActionString::new(vec![symbol]))?;
                singleton_cache[symbol.index()] = Some(v);
                Ok(v)
            }
        }
    };

    let mut trace = GreedyTrace {
        chosen: ActionString::empty(),
        values: vec![objective.evaluate(&ActionString::empty())?],
        increments: Vec::with_capacity(horizon),
        candidates: Vec::with_capacity(horizon),
    };

    for step in 1..=horizon {
        let mut extensions = constraint.extensions(&trace.chosen);
        extensions.sort_unstable();
        extensions.dedup();
        if extensions.is_empty() {
            return Err(SolveError::EmptyCandidateSet { step, partial: Box::new(trace) });
        }

        let base = *trace.values.last().expect("values is never empty");
        let mut step_candidates = Vec::with_capacity(extensions.len());
        for symbol in extensions {
            let singleton = singleton_of(symbol)?;
            let extension = objective.evaluate(&trace.chosen.extended(symbol))?;
            step_candidates.push(Candidate {
                symbol,
                singleton,
                extension,
                increment: extension - base,
            });
        }

        // Strict comparison keeps the earliest (smallest-id) maximizer.
        let best = step_candidates
            .iter()
            .enumerate()
            .fold(0, |best, (i, c)| {
                if c.extension > step_candidates[best].extension {
                    i
                } else {
                    best
                }
            });
        let chosen = step_candidates[best];
        trace.chosen.push(chosen.symbol);
        trace.values.push(chosen.extension);
        trace.increments.push(chosen.increment);
        trace.candidates.push(step_candidates);
    }

    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraint::UniformNoRepeat;
    use crate::problems::SchedulingObjective;
    use crate::testing::{mission_matrix, TableObjective};
    use approx::assert_abs_diff_eq;

    fn mission_trace() -> GreedyTrace {
        let objective = SchedulingObjective::new(mission_matrix());
        let constraint = UniformNoRepeat::new(5, 3).unwrap();
        greedy_solve(&objective, &constraint).unwrap()
    }

    #[test]
    fn mission_example_selects_first_three_agents_in_order() {
        let trace = mission_trace();
        assert_eq!(trace.chosen, ActionString::from_ids([0, 1, 2]));
        assert_abs_diff_eq!(trace.greedy_value(), 0.42208, epsilon = 1e-12);
        assert_abs_diff_eq!(trace.increments[0], 0.2, epsilon = 1e-12);
        assert_abs_diff_eq!(trace.increments[1], 0.128, epsilon = 1e-12);
        assert_abs_diff_eq!(trace.increments[2], 0.09408, epsilon = 1e-12);
    }

    #[test]
    fn trace_shape_matches_horizon_and_shrinking_candidate_sets() {
        let trace = mission_trace();
        assert_eq!(trace.horizon(), 3);
        assert_eq!(trace.values.len(), 4);
        assert_eq!(trace.values[0], 0.0);
        assert_eq!(trace.increments.len(), 3);
        assert_eq!(trace.candidates.len(), 3);
        assert_eq!(trace.step_candidates(1).len(), 5);
        assert_eq!(trace.step_candidates(2).len(), 4);
        assert_eq!(trace.step_candidates(3).len(), 3);
    }

    #[test]
    fn candidates_record_stage_one_singletons() {
        let trace = mission_trace();
        // At step 2 the singleton value of agent 4 is its stage-1 success
        // probability, not its stage-2 one.
        let c = trace
            .step_candidates(2)
            .iter()
            .find(|c| c.symbol == Symbol(4))
            .unwrap();
        assert_abs_diff_eq!(c.singleton, 0.12, epsilon = 1e-15);
        assert_abs_diff_eq!(c.extension, 0.28, epsilon = 1e-12);
        assert_abs_diff_eq!(c.increment, 0.08, epsilon = 1e-12);
    }

    #[test]
    fn ties_break_toward_the_smallest_symbol() {
        // Both symbols are worth 0.5 as singletons; symbol 0 must win.
        let obj = TableObjective::new(&[(&[0], 0.5), (&[1], 0.5)], 2, 1);
        let constraint = UniformNoRepeat::new(2, 1).unwrap();
        let trace = greedy_solve(&obj, &constraint).unwrap();
        assert_eq!(trace.chosen, ActionString::from_ids([0]));
    }

    #[test]
    fn horizon_mismatch_is_rejected() {
        let objective = SchedulingObjective::new(mission_matrix());
        let constraint = UniformNoRepeat::new(5, 2).unwrap();
        match greedy_solve(&objective, &constraint) {
            Err(SolveError::HorizonMismatch { objective: 3, constraint: 2 }) => {}
            other => panic!("expected horizon mismatch, got {other:?}"),
        }
    }

    #[test]
    fn exhausted_constraint_reports_step_and_partial_trace() {
        /// Offers symbol 0 first, then nothing, despite a horizon of 2.
        struct DeadEnd;
        impl PrefixClosedConstraint for DeadEnd {
            fn extensions(&self, s: &ActionString) -> Vec<Symbol> {
                if s.is_empty() {
                    vec![Symbol(0)]
                } else {
                    vec![]
                }
            }

            fn horizon(&self) -> usize {
                2
            }
        }

        let obj = TableObjective::new(&[(&[0], 1.0)], 1, 2);
        match greedy_solve(&obj, &DeadEnd) {
            Err(SolveError::EmptyCandidateSet { step: 2, partial }) => {
                assert_eq!(partial.chosen, ActionString::from_ids([0]));
                assert_eq!(partial.values, vec![0.0, 1.0]);
            }
            other => panic!("expected empty candidate set, got {other:?}"),
        }
    }
}
