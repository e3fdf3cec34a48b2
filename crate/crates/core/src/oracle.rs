//! Exhaustive enumeration of the feasible set, for ground-truth optima on
//! instances small enough to afford it.

use crate::constraint::PrefixClosedConstraint;
use crate::objective::{ObjectiveError, StringObjective};
use crate::string::ActionString;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default ceiling on the number of strings an exhaustive search may visit.
pub const DEFAULT_ORACLE_CAP: u64 = 10_000_000;

/// Result of exhaustively evaluating every feasible nonempty string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimumReport {
    /// A maximizer over all feasible strings of every length up to the
    /// horizon; ties go to the lexicographically smallest string (with a
    /// prefix ordered before its extensions).
    pub best_string: ActionString,
    pub best_value: f64,
    /// Number of nonempty feasible strings evaluated.
    pub n_enumerated: u64,
    /// Best value among feasible strings of each exact length `1..=horizon`;
    /// `None` where no feasible string of that length exists.
    pub per_length_best: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    /// The feasible set is (estimated to be) larger than the cap. The
    /// estimate is the empty-string branching factor raised to the horizon,
    /// or the running count at the moment the cap was exceeded mid-search.
    #[error("enumeration of about {estimate} feasible strings exceeds the cap of {cap}")]
    EnumerationTooLarge { estimate: u128, cap: u64 },
    #[error(transparent)]
    Objective(#[from] ObjectiveError),
}

fn check_estimate<C: PrefixClosedConstraint + ?Sized>(
    constraint: &C,
    cap: u64,
) -> Result<(), OracleError> {
    let branching = constraint.extensions(&ActionString::empty()).len() as u128;
    let depth = constraint.horizon() as u32;
    let estimate = branching.checked_pow(depth);
    match estimate {
        Some(e) if e <= cap as u128 => Ok(()),
        Some(e) => Err(OracleError::EnumerationTooLarge { estimate: e, cap }),
        None => Err(OracleError::EnumerationTooLarge { estimate: u128::MAX, cap }),
    }
}

/// Evaluates every feasible nonempty string by depth-first search and
/// returns the global maximizer. Aborts with
/// [`OracleError::EnumerationTooLarge`] if the up-front estimate or the live
/// count of visited strings exceeds `cap`.
///
/// When the constraint admits no nonempty string at all, the report carries
/// the empty string with its objective value.
pub fn brute_force_optimum<O, C>(
    objective: &O,
    constraint: &C,
    cap: u64,
) -> Result<OptimumReport, OracleError>
where
    O: StringObjective + ?Sized,
    C: PrefixClosedConstraint + ?Sized,
{
    check_estimate(constraint, cap)?;

    let horizon = constraint.horizon();
    let mut report = OptimumReport {
        best_string: ActionString::empty(),
        best_value: objective.evaluate(&ActionString::empty())?,
        n_enumerated: 0,
        per_length_best: vec![None; horizon],
    };
    let mut prefix = ActionString::empty();
    let mut found_any = false;
    dfs(objective, constraint, cap, &mut prefix, &mut report, &mut found_any)?;
    Ok(report)
}

fn dfs<O, C>(
    objective: &O,
    constraint: &C,
    cap: u64,
    prefix: &mut ActionString,
    report: &mut OptimumReport,
    found_any: &mut bool,
) -> Result<(), OracleError>
where
    O: StringObjective + ?Sized,
    C: PrefixClosedConstraint + ?Sized,
{
    let mut extensions = constraint.extensions(prefix);
    extensions.sort_unstable();
    extensions.dedup();
    for symbol in extensions {
        prefix.push(symbol);
        report.n_enumerated += 1;
        if report.n_enumerated > cap {
            return Err(OracleError::EnumerationTooLarge {
                estimate: report.n_enumerated as u128,
                cap,
            });
        }
        let value = objective.evaluate(prefix)?;
        let k = prefix.len();
        report.per_length_best[k - 1] = Some(match report.per_length_best[k - 1] {
            Some(best) => best.max(value),
            None => value,
        });
        // Depth-first preorder with ascending children visits strings in
        // lexicographic order, so a strict comparison keeps the
        // lexicographically smallest maximizer.
        if !*found_any || value > report.best_value {
            report.best_value = value;
            report.best_string = prefix.clone();
            *found_any = true;
        }
        if k < constraint.horizon() {
            dfs(objective, constraint, cap, prefix, report, found_any)?;
        }
        prefix.pop();
    }
    Ok(())
}

/// Lists every feasible string, the empty string first and the rest in
/// lexicographic (depth-first) order. Subject to the same cap as
/// [`brute_force_optimum`].
pub fn enumerate_feasible<C>(constraint: &C, cap: u64) -> Result<Vec<ActionString>, OracleError>
where
    C: PrefixClosedConstraint + ?Sized,
{
    check_estimate(constraint, cap)?;

    fn walk<C: PrefixClosedConstraint + ?Sized>(
        constraint: &C,
        cap: u64,
        prefix: &mut ActionString,
        out: &mut Vec<ActionString>,
    ) -> Result<(), OracleError> {
        let mut extensions = constraint.extensions(prefix);
        extensions.sort_unstable();
        extensions.dedup();
        for symbol in extensions {
            prefix.push(symbol);
            if out.len() as u64 > cap {
                return Err(OracleError::EnumerationTooLarge {
                    estimate: out.len() as u128,
                    cap,
                });
            }
            out.push(prefix.clone());
            if prefix.len() < constraint.horizon() {
                walk(constraint, cap, prefix, out)?;
            }
            prefix.pop();
        }
        Ok(())
    }

    let mut out = vec![ActionString::empty()];
    let mut prefix = ActionString::empty();
    walk(constraint, cap, &mut prefix, &mut out)?;
    Ok(out)
}
