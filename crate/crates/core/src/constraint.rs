//! Prefix-closed feasibility constraints.

use crate::string::{ActionString, Symbol};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstraintError {
    /// The horizon cannot be realized over the given ground set.
    #[error("horizon {horizon} is not in 1..={ground_size} (ground set size)")]
    InvalidDimensions { ground_size: usize, horizon: usize },
}

/// A feasibility structure over strings that is closed under prefixes: if a
/// string is feasible, so is every prefix of it. Feasibility is described
/// *constructively*, by listing the symbols that may extend a given feasible
/// string.
pub trait PrefixClosedConstraint: Send + Sync {
    /// The symbols that may be appended to the feasible string `s`, in
    /// strictly ascending id order. Must be empty once `s` reaches the
    /// horizon. The result is unspecified for infeasible `s`.
    fn extensions(&self, s: &ActionString) -> Vec<Symbol>;

    /// Maximum length of any feasible string.
    fn horizon(&self) -> usize;

    /// Whether `s` is feasible, decided by replaying it one symbol at a time
    /// from the empty string.
    fn is_feasible(&self, s: &ActionString) -> bool {
        if s.len() > self.horizon() {
            return false;
        }
        let mut prefix = ActionString::empty();
        for symbol in s.iter() {
            if !self.extensions(&prefix).contains(&symbol) {
                return false;
            }
            prefix.push(symbol);
        }
        true
    }
}

impl<T: PrefixClosedConstraint + ?Sized> PrefixClosedConstraint for &T {
    fn extensions(&self, s: &ActionString) -> Vec<Symbol> {
        (**self).extensions(s)
    }

    fn horizon(&self) -> usize {
        (**self).horizon()
    }

    fn is_feasible(&self, s: &ActionString) -> bool {
        (**self).is_feasible(s)
    }
}

impl<T: PrefixClosedConstraint + ?Sized> PrefixClosedConstraint for Box<T> {
    fn extensions(&self, s: &ActionString) -> Vec<Symbol> {
        (**self).extensions(s)
    }

    fn horizon(&self) -> usize {
        (**self).horizon()
    }

    fn is_feasible(&self, s: &ActionString) -> bool {
        (**self).is_feasible(s)
    }
}

/// Strings of up to `horizon` distinct symbols from a ground set of
/// `ground_size`: any symbol not already used may come next. This is the
/// string analogue of a uniform matroid, and the constraint under which both
/// bundled problem families operate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformNoRepeat {
    ground_size: usize,
    horizon: usize,
}

impl UniformNoRepeat {
    /// Requires `1 <= horizon <= ground_size` so that feasible strings of
    /// full length exist.
    pub fn new(ground_size: usize, horizon: usize) -> Result<Self, ConstraintError> {
        if horizon == 0 || horizon > ground_size {
            return Err(ConstraintError::InvalidDimensions { ground_size, horizon });
        }
        Ok(UniformNoRepeat { ground_size, horizon })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }
}

impl PrefixClosedConstraint for UniformNoRepeat {
    fn extensions(&self, s: &ActionString) -> Vec<Symbol> {
        if s.len() >= self.horizon {
            return Vec::new();
        }
        (0..self.ground_size as u32)
            .map(Symbol)
            .filter(|symbol| !s.contains(*symbol))
            .collect()
    }

    fn horizon(&self) -> usize {
        self.horizon
    }
}

/// Convenience constructor for [`UniformNoRepeat`].
pub fn uniform_no_repeat(
    ground_size: usize,
    horizon: usize,
) -> Result<UniformNoRepeat, ConstraintError> {
    UniformNoRepeat::new(ground_size, horizon)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extensions_exclude_used_symbols_and_respect_horizon() {
        let c = UniformNoRepeat::new(4, 2).unwrap();
        assert_eq!(
            c.extensions(&ActionString::empty()),
            vec![Symbol(0), Symbol(1), Symbol(2), Symbol(3)]
        );
        assert_eq!(
            c.extensions(&ActionString::from_ids([2])),
            vec![Symbol(0), Symbol(1), Symbol(3)]
        );
        assert_eq!(c.extensions(&ActionString::from_ids([2, 0])), vec![]);
    }

    #[test]
    fn extensions_are_ascending() {
        let c = UniformNoRepeat::new(6, 4).unwrap();
        let ext = c.extensions(&ActionString::from_ids([3, 1]));
        assert!(ext.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn feasibility_replays_the_string() {
        let c = UniformNoRepeat::new(3, 3).unwrap();
        assert!(c.is_feasible(&ActionString::empty()));
        assert!(c.is_feasible(&ActionString::from_ids([2, 0, 1])));
        assert!(!c.is_feasible(&ActionString::from_ids([0, 0])));
        assert!(!c.is_feasible(&ActionString::from_ids([0, 1, 2, 0])));
        assert!(!c.is_feasible(&ActionString::from_ids([3])));
    }

    #[test]
    fn prefixes_of_feasible_strings_are_feasible() {
        let c = UniformNoRepeat::new(5, 3).unwrap();
        let s = ActionString::from_ids([4, 0, 2]);
        assert!(c.is_feasible(&s));
        for k in 0..=s.len() {
            assert!(c.is_feasible(&s.prefix(k)));
        }
    }

    #[test]
    fn invalid_dimensions_are_rejected() {
        assert_eq!(
            UniformNoRepeat::new(2, 3).unwrap_err(),
            ConstraintError::InvalidDimensions { ground_size: 2, horizon: 3 }
        );
        assert!(UniformNoRepeat::new(3, 0).is_err());
        assert!(UniformNoRepeat::new(0, 0).is_err());
    }
}
