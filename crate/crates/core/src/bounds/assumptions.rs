//! Checks for the three instance assumptions the trajectory bounds rely on.

use crate::constraint::PrefixClosedConstraint;
use crate::greedy::GreedyTrace;
use crate::objective::{increments, ObjectiveError, StringObjective};
use crate::string::{ActionString, Symbol};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default slack for the assumption inequalities. The bundled objectives are
/// built from products and exponentials, so exact comparisons would trip on
/// rounding noise.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Outcome of one assumption check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    /// The inputs needed for the check were unavailable — e.g. no reference
    /// string of the right length.
    NotCheckable,
}

impl Verdict {
    pub fn holds(self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotCheckable => "not-checkable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a check failed, pinned down far enough to reproduce by
/// re-evaluating the objective or constraint at that spot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// 1-based step at which the violation occurs.
    pub step: usize,
    /// The symbol involved, when the check concerns one.
    pub symbol: Option<Symbol>,
    /// Sides of the violated comparison, where the check is numeric.
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssumptionCheck {
    pub verdict: Verdict,
    /// Present exactly when the verdict is `Fails`.
    pub witness: Option<Witness>,
}

impl AssumptionCheck {
    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }

    fn passed() -> Self {
        AssumptionCheck { verdict: Verdict::Holds, witness: None }
    }

    fn failed(witness: Witness) -> Self {
        AssumptionCheck { verdict: Verdict::Fails, witness: Some(witness) }
    }

    fn not_checkable() -> Self {
        AssumptionCheck { verdict: Verdict::NotCheckable, witness: None }
    }
}

/// The three assumption checks for one instance:
///
/// - `a1`: every symbol of the reference (optimal) string remains a feasible
///   extension of the greedy prefix built so far;
/// - `a2`: along the reference string, no step's increment exceeds the
///   appended symbol's standalone value;
/// - `a3`: every candidate at every greedy step has a strictly positive
///   increment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssumptionReport {
    pub a1: AssumptionCheck,
    pub a2: AssumptionCheck,
    pub a3: AssumptionCheck,
    /// Slack used in the numeric comparisons.
    pub tolerance: f64,
}

impl AssumptionReport {
    pub fn all_hold(&self) -> bool {
        self.a1.holds() && self.a2.holds() && self.a3.holds()
    }
}

/// Whether the reference string stays feasible along the greedy path: its
/// k-th symbol must be among the feasible extensions of the greedy prefix of
/// length k−1, for every k. Not checkable unless the reference has exactly
/// as many symbols as the trace has steps.
pub fn check_a1<C>(
    trace: &GreedyTrace,
    reference: &ActionString,
    constraint: &C,
) -> AssumptionCheck
where
    C: PrefixClosedConstraint + ?Sized,
{
    if reference.len() != trace.horizon() {
        return AssumptionCheck::not_checkable();
    }
    for k in 1..=trace.horizon() {
        let symbol = reference.get(k - 1).expect("length checked above");
        if !constraint.extensions(&trace.chosen.prefix(k - 1)).contains(&symbol) {
            return AssumptionCheck::failed(Witness {
                step: k,
                symbol: Some(symbol),
                lhs: None,
                rhs: None,
            });
        }
    }
    AssumptionCheck::passed()
}

/// Whether increments diminish along `s`: each step's gain must not exceed
/// the appended symbol's standalone value (within `tolerance`). Applied to
/// the oracle optimum when gating the bounds, and to arbitrary strings when
/// testing objectives.
pub fn check_a2<O>(
    objective: &O,
    s: &ActionString,
    tolerance: f64,
) -> Result<AssumptionCheck, ObjectiveError>
where
    O: StringObjective + ?Sized,
{
    let deltas = increments(objective, s)?;
    for (i, &delta) in deltas.iter().enumerate() {
        let symbol = s.get(i).expect("increments has one entry per symbol");
        let singleton = objective.evaluate(&ActionString::new(vec![symbol]))?;
        if delta > singleton + tolerance {
            return Ok(AssumptionCheck::failed(Witness {
                step: i + 1,
                symbol: Some(symbol),
                lhs: Some(delta),
                rhs: Some(singleton),
            }));
        }
    }
    Ok(AssumptionCheck::passed())
}

/// Whether every recorded candidate at every step of the trace has an
/// increment strictly above `tolerance`.
pub fn check_a3(trace: &GreedyTrace, tolerance: f64) -> AssumptionCheck {
    for k in 1..=trace.horizon() {
        for candidate in trace.step_candidates(k) {
            if candidate.increment <= tolerance {
                return AssumptionCheck::failed(Witness {
                    step: k,
                    symbol: Some(candidate.symbol),
                    lhs: Some(candidate.increment),
                    rhs: Some(tolerance),
                });
            }
        }
    }
    AssumptionCheck::passed()
}

/// Runs all three checks. Without a `reference` string (usually the oracle
/// optimum), the first two are not checkable.
pub fn assumption_report<O, C>(
    trace: &GreedyTrace,
    objective: &O,
    constraint: &C,
    reference: Option<&ActionString>,
    tolerance: f64,
) -> Result<AssumptionReport, ObjectiveError>
where
    O: StringObjective + ?Sized,
    C: PrefixClosedConstraint + ?Sized,
{
    let (a1, a2) = match reference {
        Some(r) => (
            check_a1(trace, r, constraint),
            check_a2(objective, r, tolerance)?,
        ),
        None => (AssumptionCheck::not_checkable(), AssumptionCheck::not_checkable()),
    };
    Ok(AssumptionReport { a1, a2, a3: check_a3(trace, tolerance), tolerance })
}
