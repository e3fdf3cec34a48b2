//! The objective-function contract and per-step increments.

use crate::string::{ActionString, Symbol};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ObjectiveError {
    /// The string is longer than the horizon the objective is defined for.
    #[error("string of length {len} exceeds the horizon {horizon}")]
    StageOverflow { len: usize, horizon: usize },
    /// The string mentions a symbol outside the ground set.
    #[error("symbol {symbol} is outside the ground set of size {ground_size}")]
    InvalidSymbol { symbol: Symbol, ground_size: usize },
}

/// A nonnegative objective over strings of length at most [`horizon`].
///
/// Implementations must be pure: repeated evaluation of the same string
/// returns bit-identical values. The empty string evaluates to 0, and the
/// objective must be defined for *every* string of valid symbols up to the
/// horizon — including strings the constraint would reject — because the
/// bound computations probe singletons and extensions freely.
///
/// [`horizon`]: StringObjective::horizon
pub trait StringObjective: Send + Sync {
    /// The value `f(s)`.
    fn evaluate(&self, s: &ActionString) -> Result<f64, ObjectiveError>;

    /// Maximum string length the objective is defined for.
    fn horizon(&self) -> usize;

    /// Number of symbols in the ground set; valid ids are `0..ground_size`.
    fn ground_size(&self) -> usize;
}

impl<T: StringObjective + ?Sized> StringObjective for &T {
    fn evaluate(&self, s: &ActionString) -> Result<f64, ObjectiveError> {
        (**self).evaluate(s)
    }

    fn horizon(&self) -> usize {
        (**self).horizon()
    }

    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
}

impl<T: StringObjective + ?Sized> StringObjective for Box<T> {
    fn evaluate(&self, s: &ActionString) -> Result<f64, ObjectiveError> {
        (**self).evaluate(s)
    }

    fn horizon(&self) -> usize {
        (**self).horizon()
    }

    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
}

/// The marginal value of each position: entry `k` (0-based) is
/// `f(s[..=k]) − f(s[..k])`. The entries sum to `f(s)` up to rounding, since
/// the sum telescopes from `f(())`.
pub fn increments<O: StringObjective + ?Sized>(
    objective: &O,
    s: &ActionString,
) -> Result<Vec<f64>, ObjectiveError> {
    let mut deltas = Vec::with_capacity(s.len());
    let mut previous = objective.evaluate(&ActionString::empty())?;
    for k in 1..=s.len() {
        let value = objective.evaluate(&s.prefix(k))?;
        deltas.push(value - previous);
        previous = value;
    }
    Ok(deltas)
}
