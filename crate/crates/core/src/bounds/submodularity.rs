//! Exhaustive string-submodularity checking over the feasible set.

use crate::constraint::PrefixClosedConstraint;
use crate::objective::{ObjectiveError, StringObjective};
use crate::oracle::{enumerate_feasible, OracleError};
use crate::string::{ActionString, Symbol};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Which of the two defining conditions was violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// A prefix was worth more than its extension: `f(A) > f(B) + ε` for
    /// some prefix `A` of `B`.
    Monotonicity,
    /// Appending a symbol to the longer string gained more:
    /// `f(Aj) − f(A) < f(Bj) − f(B) − ε` for some prefix `A` of `B`.
    DiminishingReturns,
}

/// A concrete pair (and symbol, for the second condition) at which string
/// submodularity fails, with both sides of the violated inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubmodularityWitness {
    pub kind: ViolationKind,
    /// The prefix `A`.
    pub shorter: ActionString,
    /// The extension `B` (with `A` a strict prefix of `B`).
    pub longer: ActionString,
    /// The appended symbol `j`, for diminishing-returns violations.
    pub symbol: Option<Symbol>,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum SubmodularityVerdict {
    Submodular,
    Violated(SubmodularityWitness),
}

impl SubmodularityVerdict {
    pub fn is_submodular(&self) -> bool {
        matches!(self, SubmodularityVerdict::Submodular)
    }
}

/// Checks both defining conditions of string submodularity over *every*
/// feasible prefix pair `A ⪯ B` and, for diminishing returns, every symbol
/// `j` with both `Aj` and `Bj` feasible:
///
/// 1. monotonicity: `f(A) ≤ f(B) + tolerance`;
/// 2. diminishing returns: `f(Aj) − f(A) ≥ f(Bj) − f(B) − tolerance`.
///
/// The feasible set is enumerated up to `cap` strings, each evaluated once.
/// Violations are reported as the first offending triple in a fixed
/// deterministic order: `B` in lexicographic order, prefix length ascending,
/// symbol id ascending.
pub fn check_string_submodular<O, C>(
    objective: &O,
    constraint: &C,
    cap: u64,
    tolerance: f64,
) -> Result<SubmodularityVerdict, OracleError>
where
    O: StringObjective + ?Sized,
    C: PrefixClosedConstraint + ?Sized,
{
    let feasible = enumerate_feasible(constraint, cap)?;
    let values: HashMap<&ActionString, f64> = feasible
        .iter()
        .map(|s| Ok((s, objective.evaluate(s)?)))
        .collect::<Result<_, ObjectiveError>>()?;

    for longer in &feasible {
        let f_longer = values[longer];
        for prefix_len in 0..longer.len() {
            let shorter = longer.prefix(prefix_len);
            // Prefix-closure guarantees every prefix was enumerated.
            let f_shorter = values[&shorter];
            if f_shorter > f_longer + tolerance {
                return Ok(SubmodularityVerdict::Violated(SubmodularityWitness {
                    kind: ViolationKind::Monotonicity,
                    shorter,
                    longer: longer.clone(),
                    symbol: None,
                    lhs: f_shorter,
                    rhs: f_longer,
                }));
            }
            let mut extensions = constraint.extensions(longer);
            extensions.sort_unstable();
            extensions.dedup();
            for symbol in extensions {
                let shorter_ext = shorter.extended(symbol);
                // The symbol must extend the shorter string feasibly too.
                let Some(&f_shorter_ext) = values.get(&shorter_ext) else {
                    continue;
                };
                let f_longer_ext = values[&longer.extended(symbol)];
                let gain_shorter = f_shorter_ext - f_shorter;
                let gain_longer = f_longer_ext - f_longer;
                if gain_shorter < gain_longer - tolerance {
                    return Ok(SubmodularityVerdict::Violated(SubmodularityWitness {
                        kind: ViolationKind::DiminishingReturns,
                        shorter,
                        longer: longer.clone(),
                        symbol: Some(symbol),
                        lhs: gain_shorter,
                        rhs: gain_longer,
                    }));
                }
            }
        }
    }
    Ok(SubmodularityVerdict::Submodular)
}
