//! Experiment execution: instance construction and the shared
//! greedy → curvature → bounds → oracle → certification pipeline.

use std::time::Instant;

use anyhow::{bail, Context, Result};
use stringopt::bounds::{assumption_report, bounds_report, certify, greedy_curvature};
use stringopt::problems::{
    coverage_constraint, scheduling_constraint, CoverageObjective, MissionGrid,
    SchedulingObjective, SuccessMatrix,
};
use stringopt::{brute_force_optimum, greedy_solve, OracleError, StringObjective, UniformNoRepeat};

use crate::config::{ProblemKind, ResolvedConfig};
use crate::report::RunReport;

/// Reaction when the oracle refuses because the feasible set exceeds the
/// enumeration cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleFailurePolicy {
    /// Record a warning and keep the bounds-only report.
    DowngradeToBounds,
    /// Abort; used by verification, which demands a ground-truth optimum.
    Fatal,
}

/// Builds the configured instance and runs the full pipeline, timing the
/// whole computation.
pub fn execute(config: &ResolvedConfig, policy: OracleFailurePolicy) -> Result<RunReport> {
    let started = Instant::now();
    let mut report = match config.problem {
        ProblemKind::Scheduling => {
            let rows = config
                .matrix
                .clone()
                .expect("resolved scheduling config carries a matrix");
            let matrix = SuccessMatrix::new(rows).context("invalid scheduling matrix")?;
            let constraint = scheduling_constraint(&matrix);
            let objective = SchedulingObjective::new(matrix);
            pipeline(&objective, &constraint, config, policy)?
        }
        ProblemKind::Coverage => {
            let params = config.grid.expect("resolved coverage config carries a grid");
            // Resolution validated width, height, and lambda, which is
            // exactly the constructor's contract.
            let grid =
                MissionGrid::rectangular(params.width, params.height, params.lambda, params.mass);
            let constraint = coverage_constraint(&grid, config.horizon)
                .context("invalid coverage horizon")?;
            let objective =
                CoverageObjective::new(grid, config.horizon).context("invalid coverage instance")?;
            pipeline(&objective, &constraint, config, policy)?
        }
    };
    report.runtime_ms = started.elapsed().as_millis();
    Ok(report)
}

fn pipeline<O: StringObjective>(
    objective: &O,
    constraint: &UniformNoRepeat,
    config: &ResolvedConfig,
    policy: OracleFailurePolicy,
) -> Result<RunReport> {
    let trace = greedy_solve(objective, constraint).context("greedy solve failed")?;
    let curvature = greedy_curvature(&trace).context("curvature computation failed")?;
    let bounds = bounds_report(&trace, &curvature).context("bound computation failed")?;

    let (oracle, oracle_warning) = if config.run_oracle {
        match brute_force_optimum(objective, constraint, config.oracle_cap) {
            Ok(optimum) => (Some(optimum), None),
            Err(OracleError::EnumerationTooLarge { estimate, cap }) => {
                if policy == OracleFailurePolicy::Fatal {
                    bail!(
                        "verification requires the exhaustive optimum, but about {estimate} \
                         feasible strings exceed the cap of {cap}; raise --oracle-cap or \
                         shrink the instance"
                    );
                }
                let warning = format!(
                    "oracle skipped: about {estimate} feasible strings exceed the cap of \
                     {cap}; reporting bounds without certification"
                );
                (None, Some(warning))
            }
            Err(other) => return Err(other).context("oracle enumeration failed"),
        }
    } else {
        (None, None)
    };

    let reference = oracle.as_ref().map(|o| &o.best_string);
    let assumptions = assumption_report(&trace, objective, constraint, reference, config.tolerance)
        .context("assumption checks failed")?;
    let certification = oracle
        .as_ref()
        .map(|optimum| certify(&trace, optimum, &bounds, &assumptions));

    Ok(RunReport {
        config: config.clone(),
        trace,
        curvature,
        bounds,
        assumptions,
        oracle,
        oracle_warning,
        certification,
        runtime_ms: 0,
    })
}
