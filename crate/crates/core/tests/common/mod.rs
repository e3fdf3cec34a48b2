//! Shared fixtures and generators for the integration suites.

use stringopt::problems::{random_scheduling_instance, SuccessMatrix};

/// The five-agent, three-stage worked example used across the suites.
/// Not every test target that compiles this module calls it.
#[allow(dead_code)]
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

/// A deterministic family of small scheduling instances with varying shape.
/// Even seeds draw unrestricted stage profiles; odd seeds stage-decreasing
/// ones (the regime where the objective is string submodular). Dimensions
/// cycle through agents ≤ `max_agents` and stages ≤ `max_stages`.
pub fn instance_family(
    count: usize,
    base_seed: u64,
    max_agents: usize,
    max_stages: usize,
) -> Vec<(u64, SuccessMatrix)> {
    (0..count as u64)
        .map(|i| {
            let seed = base_seed + i;
            let n_agents = 2 + (seed % (max_agents as u64 - 1)) as usize;
            let n_stages = 1 + (seed % (n_agents.min(max_stages) as u64)) as usize;
            let range = if seed % 3 == 0 { (0.05, 0.9) } else { (0.05, 0.45) };
            let matrix = random_scheduling_instance(
                seed,
                n_agents,
                n_stages,
                range,
                seed % 2 == 1,
            );
            (seed, matrix)
        })
        .collect()
}
