//! Multi-stage task scheduling: deploy one agent per stage, no agent twice,
//! to maximize the probability that the task gets done at some stage.

use super::ProblemError;
use crate::constraint::UniformNoRepeat;
use crate::objective::{ObjectiveError, StringObjective};
use crate::string::ActionString;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Per-agent, per-stage success probabilities: entry `(i, k)` is the chance
/// that agent `i` completes the task if deployed at stage `k`. Construction
/// validates that rows are rectangular, every entry is a probability, and
/// there are at least as many agents as stages — the no-repeat constraint
/// needs that many distinct agents to fill every stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct SuccessMatrix {
    rows: Vec<Vec<f64>>,
}

impl SuccessMatrix {
    /// `rows[i][k]` is agent `i`'s success probability at stage `k`.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self, ProblemError> {
        let agents = rows.len();
        let stages = rows.first().map_or(0, Vec::len);
        if agents == 0 || stages == 0 || agents < stages {
            return Err(ProblemError::InvalidDimensions { agents, stages });
        }
        for (agent, row) in rows.iter().enumerate() {
            if row.len() != stages {
                return Err(ProblemError::RaggedMatrix {
                    agent,
                    got: row.len(),
                    expected: stages,
                });
            }
            for (stage, &value) in row.iter().enumerate() {
                if !(0.0..=1.0).contains(&value) {
                    return Err(ProblemError::InvalidProbability { agent, stage, value });
                }
            }
        }
        Ok(SuccessMatrix { rows })
    }

    pub fn n_agents(&self) -> usize {
        self.rows.len()
    }

    pub fn n_stages(&self) -> usize {
        self.rows[0].len()
    }

    /// Success probability of `agent` at `stage`, both 0-based.
    pub fn prob(&self, agent: usize, stage: usize) -> f64 {
        self.rows[agent][stage]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// The same agents restricted to the first `stages` stages, for
    /// shorter-horizon runs on the same instance.
    pub fn truncated(&self, stages: usize) -> Result<SuccessMatrix, ProblemError> {
        if stages == 0 || stages > self.n_stages() {
            return Err(ProblemError::InvalidDimensions { agents: self.n_agents(), stages });
        }
        SuccessMatrix::new(self.rows.iter().map(|row| row[..stages].to_vec()).collect())
    }
}

impl TryFrom<Vec<Vec<f64>>> for SuccessMatrix {
    type Error = ProblemError;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self, Self::Error> {
        SuccessMatrix::new(rows)
    }
}

impl From<SuccessMatrix> for Vec<Vec<f64>> {
    fn from(matrix: SuccessMatrix) -> Self {
        matrix.rows
    }
}

/// The probability that the task succeeds at some stage: deploying agent `i`
/// at position `k` multiplies the running failure probability by
/// `1 − p(i, k)`. The stage is the *position in the string*, so the same
/// agents in a different order generally score differently.
#[derive(Debug, Clone, PartialEq)]
pub struct SchedulingObjective {
    matrix: SuccessMatrix,
}

impl SchedulingObjective {
    pub fn new(matrix: SuccessMatrix) -> Self {
        SchedulingObjective { matrix }
    }

    pub fn matrix(&self) -> &SuccessMatrix {
        &self.matrix
    }
}

impl StringObjective for SchedulingObjective {
    fn evaluate(&self, s: &ActionString) -> Result<f64, ObjectiveError> {
        if s.len() > self.matrix.n_stages() {
            return Err(ObjectiveError::StageOverflow {
                len: s.len(),
                horizon: self.matrix.n_stages(),
            });
        }
        let mut failure = 1.0;
        for (stage, symbol) in s.iter().enumerate() {
            if symbol.index() >= self.matrix.n_agents() {
                return Err(ObjectiveError::InvalidSymbol {
                    symbol,
                    ground_size: self.matrix.n_agents(),
                });
            }
            failure *= 1.0 - self.matrix.prob(symbol.index(), stage);
        }
        Ok(1.0 - failure)
    }

    fn horizon(&self) -> usize {
        self.matrix.n_stages()
    }

    fn ground_size(&self) -> usize {
        self.matrix.n_agents()
    }
}

/// The matching feasibility structure: each stage takes one agent, never
/// reusing one. The matrix invariant (agents ≥ stages ≥ 1) makes this
/// infallible.
pub fn scheduling_constraint(matrix: &SuccessMatrix) -> UniformNoRepeat {
    UniformNoRepeat::new(matrix.n_agents(), matrix.n_stages())
        .expect("matrix guarantees agents ≥ stages ≥ 1")
}

/// A seeded random instance: every probability drawn uniformly from
/// `value_range`. With `stage_decreasing`, each agent's row is sorted so
/// later stages never beat earlier ones — the regime in which the
/// scheduling objective is string submodular.
///
/// Panics unless `n_agents ≥ n_stages ≥ 1` and `value_range` lies strictly
/// inside (0, 1).
pub fn random_scheduling_instance(
    seed: u64,
    n_agents: usize,
    n_stages: usize,
    value_range: (f64, f64),
    stage_decreasing: bool,
) -> SuccessMatrix {
    let (lo, hi) = value_range;
    assert!(
        n_agents >= n_stages && n_stages >= 1,
        "need agents ≥ stages ≥ 1, got {n_agents} agents and {n_stages} stages"
    );
    assert!(
        0.0 < lo && lo <= hi && hi < 1.0,
        "value range ({lo}, {hi}) must lie inside (0, 1)"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..n_agents)
        .map(|_| {
            let mut row: Vec<f64> =
                (0..n_stages).map(|_| rng.random_range(lo..=hi)).collect();
            if stage_decreasing {
                row.sort_by(|a, b| b.total_cmp(a));
            }
            row
        })
        .collect();
    SuccessMatrix::new(rows).expect("entries drawn inside (0, 1) with enough agents")
}
