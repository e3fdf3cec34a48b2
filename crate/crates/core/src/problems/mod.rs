//! Concrete problem families: multi-stage task scheduling and lattice
//! sensor coverage, each packaged as an objective plus constraint.

mod coverage;
mod scheduling;

pub use coverage::{coverage_constraint, CoverageObjective, MassKind, MissionGrid};
pub use scheduling::{
    random_scheduling_instance, scheduling_constraint, SchedulingObjective, SuccessMatrix,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProblemError {
    /// A success matrix needs at least as many agents as stages (no-repeat
    /// selection must fill every stage), and at least one of each.
    #[error("matrix with {agents} agents cannot fill {stages} stages (need agents ≥ stages ≥ 1)")]
    InvalidDimensions { agents: usize, stages: usize },
    #[error("matrix row {agent} has {got} entries, expected {expected}")]
    RaggedMatrix { agent: usize, got: usize, expected: usize },
    #[error("probability {value} for agent {agent} at stage {stage} is outside [0, 1]")]
    InvalidProbability { agent: usize, stage: usize, value: f64 },
    /// Placement horizon must fit the number of distinct sites.
    #[error("horizon {horizon} is not in 1..={sites} (number of sites)")]
    InvalidHorizon { horizon: usize, sites: usize },
    #[error("grid needs at least one point")]
    EmptyGrid,
    #[error("grid has {points} points but {masses} mass entries")]
    MassMismatch { points: usize, masses: usize },
    #[error("mass {value} at point index {index} is negative or not finite")]
    InvalidMass { index: usize, value: f64 },
    #[error("decay rate {0} must be positive and finite")]
    InvalidDecay(f64),
    #[error("duplicate grid point ({x}, {y})")]
    DuplicatePoint { x: i64, y: i64 },
}
