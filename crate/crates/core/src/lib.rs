//! Greedy optimization over ordered action sequences.
//!
//! This crate maximizes set-like objectives where *order matters*: a solution
//! is a string of symbols rather than a set, feasibility is prefix-closed, and
//! the value of appending a symbol depends on everything chosen before it.
//! The library provides
//!
//! - a greedy solver that records a full per-step trace ([`greedy_solve`]),
//! - an exhaustive oracle for small instances ([`brute_force_optimum`]),
//! - trajectory-computable performance bounds derived from the greedy trace
//!   alone, together with checks for the assumptions those bounds require
//!   ([`bounds`]),
//! - two concrete problem families, multi-stage task scheduling and sensor
//!   coverage ([`problems`]).
//!
//! The central guarantee: for a bound `b` whose assumptions verify on an
//! instance, the greedy value is at least `b` times the optimal value. The
//! [`bounds::certify`] routine checks this against the oracle.

pub mod bounds;
mod constraint;
mod greedy;
mod objective;
mod oracle;
pub mod problems;
mod string;

pub use constraint::{uniform_no_repeat, ConstraintError, PrefixClosedConstraint, UniformNoRepeat};
pub use greedy::{greedy_solve, Candidate, GreedyTrace, SolveError};
pub use objective::{increments, ObjectiveError, StringObjective};
pub use oracle::{
    brute_force_optimum, enumerate_feasible, OptimumReport, OracleError, DEFAULT_ORACLE_CAP,
};
pub use string::{ActionString, Symbol};

#[cfg(test)]
pub(crate) mod testing {
    //! Shared fixtures for unit tests.

    use crate::problems::SuccessMatrix;
    use crate::{ActionString, ObjectiveError, StringObjective, Symbol};
    use std::collections::HashMap;

    /// The five-agent, three-stage success matrix used as a worked example
    /// throughout the test suite. Rows are agents, columns are stages.
    pub fn mission_matrix() -> SuccessMatrix {
        SuccessMatrix::new(vec![
            vec![0.20, 0.16, 0.14],
            vec![0.18, 0.16, 0.14],
            vec![0.16, 0.14, 0.14],
            vec![0.14, 0.12, 0.10],
            vec![0.12, 0.10, 0.08],
        ])
        .expect("matrix is valid")
    }

    /// An objective defined by an explicit value table. Strings absent from
    /// the table evaluate to 0. Useful for constructing counterexamples.
    pub struct TableObjective {
        pub table: HashMap<Vec<u32>, f64>,
        pub ground_size: usize,
        pub horizon: usize,
    }

    impl TableObjective {
        pub fn new(entries: &[(&[u32], f64)], ground_size: usize, horizon: usize) -> Self {
            let table = entries
                .iter()
                .map(|(ids, v)| (ids.to_vec(), *v))
                .collect();
            Self { table, ground_size, horizon }
        }
    }

    impl StringObjective for TableObjective {
        fn evaluate(&self, s: &ActionString) -> Result<f64, ObjectiveError> {
            if s.len() > self.horizon {
                return Err(ObjectiveError::StageOverflow {
                    len: s.len(),
                    horizon: self.horizon,
                });
            }
            if let Some(sym) = s.iter().find(|sym| sym.index() >= self.ground_size) {
                return Err(ObjectiveError::InvalidSymbol {
                    symbol: sym,
                    ground_size: self.ground_size,
                });
            }
            let ids: Vec<u32> = s.iter().map(Symbol::id).collect();
            Ok(self.table.get(&ids).copied().unwrap_or(0.0))
        }

        fn ground_size(&self) -> usize {
            self.ground_size
        }

        fn horizon(&self) -> usize {
            self.horizon
        }
    }
}
