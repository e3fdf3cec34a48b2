//! Symbols and ordered action strings.

use serde::{Deserialize, Serialize};
use std::fmt;

/// An action drawn from a finite ground set, identified by a dense index
/// `0..ground_size`. What the index means (an agent, a sensor site) is up to
/// the problem that owns the ground set.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Symbol(pub u32);

impl Symbol {
    /// The raw identifier.
    pub fn id(self) -> u32 {
        self.0
    }

    /// The identifier widened for indexing into per-symbol tables.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for Symbol {
    fn from(id: u32) -> Self {
        Symbol(id)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered sequence of symbols. Unlike a set, position is significant:
/// `(a, b)` and `(b, a)` are different strings and an objective may value
/// them differently. Derived `Ord` is lexicographic with shorter prefixes
/// first, which is the tie-break order used by the exhaustive oracle.
#[derive(
    Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct ActionString(Vec<Symbol>);

impl ActionString {
    /// The empty string.
    pub fn empty() -> Self {
        ActionString(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        ActionString(symbols)
    }

    /// Builds a string from raw symbol identifiers.
    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        ActionString(ids.into_iter().map(Symbol).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().copied()
    }

    /// The first `k` symbols as a new string.
    ///
    /// Panics if `k` exceeds the length.
    pub fn prefix(&self, k: usize) -> ActionString {
        assert!(k <= self.len(), "prefix length {k} exceeds string length {}", self.len());
        ActionString(self.0[..k].to_vec())
    }

    /// A copy of this string with `symbol` appended.
    pub fn extended(&self, symbol: Symbol) -> ActionString {
        let mut symbols = Vec::with_capacity(self.0.len() + 1);
        symbols.extend_from_slice(&self.0);
        symbols.push(symbol);
        ActionString(symbols)
    }

    /// Appends `symbol` in place.
    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    /// Removes and returns the last symbol, if any.
    pub fn pop(&mut self) -> Option<Symbol> {
        self.0.pop()
    }

    /// The symbol at position `k` (0-based), if any.
    pub fn get(&self, k: usize) -> Option<Symbol> {
        self.0.get(k).copied()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.0.last().copied()
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        self.0.contains(&symbol)
    }

    /// The raw identifiers in order.
    pub fn ids(&self) -> Vec<u32> {
        self.0.iter().map(|s| s.0).collect()
    }
}

impl From<Vec<Symbol>> for ActionString {
    fn from(symbols: Vec<Symbol>) -> Self {
        ActionString(symbols)
    }
}

impl FromIterator<Symbol> for ActionString {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        ActionString(iter.into_iter().collect())
    }
}

impl fmt::Display for ActionString {
    /// Space-joined identifiers; the empty string prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let mut first = true;
        for s in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}
