//! Structural properties of the greedy solver, the exhaustive oracle, and
//! the no-repeat constraint, exercised over families of random instances.

mod common;

use common::{instance_family, mission_matrix};
use proptest::prelude::*;
use stringopt::problems::{scheduling_constraint, SchedulingObjective};
use stringopt::{
    brute_force_optimum, enumerate_feasible, greedy_solve, increments, ActionString,
    PrefixClosedConstraint, StringObjective, Symbol, UniformNoRepeat, DEFAULT_ORACLE_CAP,
};

#[test]
fn greedy_string_is_feasible_and_increments_telescope() {
    for (seed, matrix) in instance_family(150, 1_000, 6, 4) {
        let objective = SchedulingObjective::new(matrix.clone());
        let constraint = scheduling_constraint(&matrix);
        let trace = greedy_solve(&objective, &constraint).unwrap();

        assert!(constraint.is_feasible(&trace.chosen), "seed {seed}");
        assert_eq!(trace.chosen.len(), matrix.n_stages(), "seed {seed}");

        // The recorded increments must agree with independent re-evaluation
        // and telescope to the final value.
        let recomputed = increments(&objective, &trace.chosen).unwrap();
        for (a, b) in trace.increments.iter().zip(&recomputed) {
            assert!((a - b).abs() <= 1e-12, "seed {seed}");
        }
        let total: f64 = trace.increments.iter().sum();
        assert!((total - trace.greedy_value()).abs() <= 1e-12, "seed {seed}");
    }
}

#[test]
fn greedy_is_deterministic() {
    for (seed, matrix) in instance_family(40, 2_000, 6, 4) {
        let objective = SchedulingObjective::new(matrix.clone());
        let constraint = scheduling_constraint(&matrix);
        let first = greedy_solve(&objective, &constraint).unwrap();
        let second = greedy_solve(&objective, &constraint).unwrap();
        assert_eq!(first, second, "seed {seed}");
    }
}

#[test]
fn oracle_dominates_greedy_and_visits_every_string() {
    for (seed, matrix) in instance_family(60, 3_000, 5, 3) {
        let objective = SchedulingObjective::new(matrix.clone());
        let constraint = scheduling_constraint(&matrix);
        let trace = greedy_solve(&objective, &constraint).unwrap();
        let optimum = brute_force_optimum(&objective, &constraint, DEFAULT_ORACLE_CAP).unwrap();

        // The greedy string is feasible, so the exhaustive maximum covers it.
        assert!(
            optimum.best_value >= trace.greedy_value() - 1e-12,
            "seed {seed}"
        );
        assert!(constraint.is_feasible(&optimum.best_string), "seed {seed}");

        // Enumeration count for no-repeat selection: sum of falling
        // factorials n·(n−1)···(n−k+1) over k = 1..=K.
        let n = matrix.n_agents() as u64;
        let k = matrix.n_stages() as u64;
        let expected: u64 = (1..=k)
            .map(|len| ((n - len + 1)..=n).product::<u64>())
            .sum();
        assert_eq!(optimum.n_enumerated, expected, "seed {seed}");

        // Per-length bests are consistent with the global best.
        let global = optimum
            .per_length_best
            .iter()
            .filter_map(|v| *v)
            .fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(global, optimum.best_value, "seed {seed}");
    }
}

#[test]
fn oracle_tie_break_prefers_lexicographically_smallest() {
    // A flat matrix makes every string of the same length equally good.
    let matrix =
        stringopt::problems::SuccessMatrix::new(vec![vec![0.5, 0.5]; 3]).unwrap();
    let objective = SchedulingObjective::new(matrix.clone());
    let constraint = scheduling_constraint(&matrix);
    let optimum = brute_force_optimum(&objective, &constraint, 1_000).unwrap();
    assert_eq!(optimum.best_string, ActionString::from_ids([0, 1]));
}

#[test]
fn mission_example_greedy_equals_oracle() {
    let matrix = mission_matrix();
    let objective = SchedulingObjective::new(matrix.clone());
    let constraint = scheduling_constraint(&matrix);
    let trace = greedy_solve(&objective, &constraint).unwrap();
    let optimum = brute_force_optimum(&objective, &constraint, DEFAULT_ORACLE_CAP).unwrap();
    assert_eq!(optimum.best_string, trace.chosen);
    assert_eq!(optimum.n_enumerated, 85);
}

proptest! {
    /// Augmentation property of no-repeat selection: a strictly shorter
    /// feasible string can always borrow a symbol from a longer one.
    #[test]
    fn shorter_feasible_strings_can_be_augmented_from_longer(
        ground in 2usize..7,
        seed in 0u64..500,
    ) {
        let horizon = ground.min(4);
        let constraint = UniformNoRepeat::new(ground, horizon).unwrap();
        let feasible = enumerate_feasible(&constraint, DEFAULT_ORACLE_CAP).unwrap();
        // Pick two feasible strings deterministically from the seed.
        let a = &feasible[(seed as usize * 7) % feasible.len()];
        let b = &feasible[(seed as usize * 13) % feasible.len()];
        if a.len() < b.len() {
            let extension_found = b
                .iter()
                .any(|symbol| constraint.extensions(a).contains(&symbol));
            prop_assert!(extension_found, "a = {a}, b = {b}");
        }
    }

    /// Every feasible string's prefixes are feasible, and infeasible strings
    /// are never produced by honest extension walks.
    #[test]
    fn feasibility_is_prefix_closed(ground in 1usize..7, horizon_offset in 0usize..4) {
        let horizon = 1 + horizon_offset.min(ground - 1);
        let constraint = UniformNoRepeat::new(ground, horizon).unwrap();
        for s in enumerate_feasible(&constraint, DEFAULT_ORACLE_CAP).unwrap() {
            for k in 0..=s.len() {
                prop_assert!(constraint.is_feasible(&s.prefix(k)));
            }
        }
    }
}

#[test]
fn trace_candidates_match_constraint_extensions() {
    for (seed, matrix) in instance_family(40, 4_000, 6, 4) {
        let objective = SchedulingObjective::new(matrix.clone());
        let constraint = scheduling_constraint(&matrix);
        let trace = greedy_solve(&objective, &constraint).unwrap();
        for k in 1..=trace.horizon() {
            let recorded: Vec<Symbol> =
                trace.step_candidates(k).iter().map(|c| c.symbol).collect();
            let expected = constraint.extensions(&trace.chosen.prefix(k - 1));
            assert_eq!(recorded, expected, "seed {seed}, step {k}");

            // Each candidate's recorded values match fresh evaluation.
            for candidate in trace.step_candidates(k) {
                let extension = objective
                    .evaluate(&trace.chosen.prefix(k - 1).extended(candidate.symbol))
                    .unwrap();
                assert!((candidate.extension - extension).abs() <= 1e-12);
                let singleton = objective
                    .evaluate(&ActionString::new(vec![candidate.symbol]))
                    .unwrap();
                assert!((candidate.singleton - singleton).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn chosen_symbol_maximizes_extension_value_with_smallest_id_on_ties() {
    for (seed, matrix) in instance_family(60, 5_000, 6, 4) {
        let objective = SchedulingObjective::new(matrix.clone());
        let constraint = scheduling_constraint(&matrix);
        let trace = greedy_solve(&objective, &constraint).unwrap();
        for k in 1..=trace.horizon() {
            let chosen = trace.chosen.get(k - 1).unwrap();
            let best = trace
                .step_candidates(k)
                .iter()
                .map(|c| c.extension)
                .fold(f64::NEG_INFINITY, f64::max);
            let chosen_candidate = trace
                .step_candidates(k)
                .iter()
                .find(|c| c.symbol == chosen)
                .unwrap();
            assert_eq!(chosen_candidate.extension, best, "seed {seed}, step {k}");
            // No smaller-id candidate attains the same value.
            for candidate in trace.step_candidates(k) {
                if candidate.symbol < chosen {
                    assert!(candidate.extension < best, "seed {seed}, step {k}");
                }
            }
        }
    }
}
