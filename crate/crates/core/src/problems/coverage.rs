//! Sensor coverage on a lattice: place sensors at grid points to maximize
//! the expected mass of detected events, with detection probability decaying
//! exponentially in the distance to the nearest sensors.

use super::ProblemError;
use crate::constraint::{ConstraintError, UniformNoRepeat};
use crate::objective::{ObjectiveError, StringObjective};
use crate::string::ActionString;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

/// How event mass is distributed over a rectangular grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MassKind {
    /// Every point carries mass 1.
    Uniform,
    /// Mass grows linearly toward the far corner: `(x + y)/(width + height)`,
    /// reaching exactly 1 at `(width, height)`.
    Linear,
}

/// The mission domain: lattice points where events may occur — and where
/// sensors may be placed — each with a nonnegative event mass, plus the
/// exponential decay rate of detection probability over distance.
#[derive(Debug, Clone, PartialEq)]
pub struct MissionGrid {
    points: Vec<(i64, i64)>,
    mass: Vec<f64>,
    decay: f64,
}

impl MissionGrid {
    /// All integer points `(x, y)` with `1 ≤ x ≤ width`, `1 ≤ y ≤ height`.
    /// Site ids run x-major: id = `(x−1)·height + (y−1)`.
    ///
    /// Panics unless `width, height ≥ 1` and `decay` is positive and finite.
    pub fn rectangular(width: usize, height: usize, decay: f64, mass: MassKind) -> MissionGrid {
        assert!(width >= 1 && height >= 1, "grid must be at least 1×1, got {width}×{height}");
        assert!(
            decay > 0.0 && decay.is_finite(),
            "decay rate must be positive and finite, got {decay}"
        );
        let mut points = Vec::with_capacity(width * height);
        let mut masses = Vec::with_capacity(width * height);
        for x in 1..=width as i64 {
            for y in 1..=height as i64 {
                points.push((x, y));
                masses.push(match mass {
                    MassKind::Uniform => 1.0,
                    MassKind::Linear => (x + y) as f64 / (width + height) as f64,
                });
            }
        }
        MissionGrid { points, mass: masses, decay }
    }

    /// An explicit point list with per-point masses.
    pub fn from_points(
        points: Vec<(i64, i64)>,
        mass: Vec<f64>,
        decay: f64,
    ) -> Result<MissionGrid, ProblemError> {
        if !(decay > 0.0 && decay.is_finite()) {
            return Err(ProblemError::InvalidDecay(decay));
        }
        if points.is_empty() {
            return Err(ProblemError::EmptyGrid);
        }
        if mass.len() != points.len() {
            return Err(ProblemError::MassMismatch { points: points.len(), masses: mass.len() });
        }
        for (index, &value) in mass.iter().enumerate() {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(ProblemError::InvalidMass { index, value });
            }
        }
        let mut seen = HashSet::new();
        for &(x, y) in &points {
            if !seen.insert((x, y)) {
                return Err(ProblemError::DuplicatePoint { x, y });
            }
        }
        Ok(MissionGrid { points, mass, decay })
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    pub fn decay(&self) -> f64 {
        self.decay
    }

    /// Upper bound on any coverage value: the mass of everything there is
    /// to detect.
    pub fn total_mass(&self) -> f64 {
        self.mass.iter().sum()
    }
}

/// Expected detected mass
/// `H(s) = Σ_x R(x)·(1 − Π_i (1 − e^{−λ·‖x − s_i‖}))`
/// over Euclidean distances on the lattice. A sensor on top of a point
/// detects it with certainty; the product form makes the value independent
/// of placement order, so this is a set function embedded as a string
/// function.
///
/// Evaluation is linear in the number of grid points: each site's detection
/// row is computed once on first use, and the elementwise running product of
/// miss probabilities is memoized per queried prefix. The memo is bounded;
/// on overflow it is cleared and rebuilt, always multiplying in string
/// order, so results are bit-identical whether or not a memo entry survived.
#[derive(Debug)]
pub struct CoverageObjective {
    grid: MissionGrid,
    horizon: usize,
    /// Row `s`: detection probability of every grid point from site `s`.
    detection: Vec<OnceLock<Vec<f64>>>,
    /// Miss-probability vectors of previously evaluated placements.
    miss_memo: Mutex<HashMap<ActionString, Arc<Vec<f64>>>>,
    /// Miss probabilities with no sensors placed: all ones.
    no_sensors: Arc<Vec<f64>>,
}

impl CoverageObjective {
    const MEMO_CAPACITY: usize = 256;

    pub fn new(grid: MissionGrid, horizon: usize) -> Result<CoverageObjective, ProblemError> {
        if horizon == 0 || horizon > grid.n_points() {
            return Err(ProblemError::InvalidHorizon { horizon, sites: grid.n_points() });
        }
        let detection = (0..grid.n_points()).map(|_| OnceLock::new()).collect();
        let no_sensors = Arc::new(vec![1.0; grid.n_points()]);
        Ok(CoverageObjective {
            grid,
            horizon,
            detection,
            miss_memo: Mutex::new(HashMap::new()),
            no_sensors,
        })
    }

    pub fn grid(&self) -> &MissionGrid {
        &self.grid
    }

    fn detection_row(&self, site: usize) -> &[f64] {
        self.detection[site].get_or_init(|| {
            let (sx, sy) = self.grid.points[site];
            self.grid
                .points
                .iter()
                .map(|&(x, y)| {
                    let dx = (x - sx) as f64;
                    let dy = (y - sy) as f64;
                    (-self.grid.decay * (dx * dx + dy * dy).sqrt()).exp()
                })
                .collect()
        })
    }

    /// Per-point probability that *no* sensor of `s` detects the point,
    /// built by extending the memoized vector of the one-shorter prefix.
    fn miss_vector(&self, s: &ActionString) -> Arc<Vec<f64>> {
        if s.is_empty() {
            return Arc::clone(&self.no_sensors);
        }
        if let Some(hit) = self.miss_memo.lock().expect("memo poisoned").get(s) {
            return Arc::clone(hit);
        }
        let base = self.miss_vector(&s.prefix(s.len() - 1));
        let row = self.detection_row(s.last().expect("nonempty").index());
        let vector: Vec<f64> = base.iter().zip(row).map(|(m, p)| m * (1.0 - p)).collect();
        let vector = Arc::new(vector);
        let mut memo = self.miss_memo.lock().expect("memo poisoned");
        if memo.len() >= Self::MEMO_CAPACITY {
            memo.clear();
        }
        memo.insert(s.clone(), Arc::clone(&vector));
        vector
    }
}

impl StringObjective for CoverageObjective {
    fn evaluate(&self, s: &ActionString) -> Result<f64, ObjectiveError> {
        if s.len() > self.horizon {
            return Err(ObjectiveError::StageOverflow { len: s.len(), horizon: self.horizon });
        }
        for symbol in s.iter() {
            if symbol.index() >= self.grid.n_points() {
                return Err(ObjectiveError::InvalidSymbol {
                    symbol,
                    ground_size: self.grid.n_points(),
                });
            }
        }
        if s.is_empty() {
            return Ok(0.0);
        }
        let miss = self.miss_vector(s);
        Ok(self
            .grid
            .mass
            .iter()
            .zip(miss.iter())
            .map(|(r, m)| r * (1.0 - m))
            .sum())
    }

    fn horizon(&self) -> usize {
        self.horizon
    }

    fn ground_size(&self) -> usize {
        self.grid.n_points()
    }
}

/// The matching feasibility structure: choose `horizon` distinct sites.
pub fn coverage_constraint(
    grid: &MissionGrid,
    horizon: usize,
) -> Result<UniformNoRepeat, ConstraintError> {
    UniformNoRepeat::new(grid.n_points(), horizon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::string::Symbol;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rectangular_layout_is_x_major_from_one() {
        let grid = MissionGrid::rectangular(3, 2, 1.0, MassKind::Uniform);
        assert_eq!(grid.n_points(), 6);
        assert_eq!(
            grid.points(),
            &[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]
        );
        assert!(grid.mass().iter().all(|&m| m == 1.0));
    }

    #[test]
    fn linear_mass_peaks_at_the_far_corner() {
        let grid = MissionGrid::rectangular(50, 40, 1.0, MassKind::Linear);
        assert_eq!(grid.n_points(), 2000);
        // Site (1, 1) is id 0; site (50, 40) is the last id.
        assert_abs_diff_eq!(grid.mass()[0], 2.0 / 90.0, epsilon = 1e-15);
        assert_abs_diff_eq!(grid.mass()[1999], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn sensor_on_a_point_detects_it_with_certainty() {
        let grid = MissionGrid::from_points(vec![(2, 3)], vec![0.7], 1.3).unwrap();
        let objective = CoverageObjective::new(grid, 1).unwrap();
        let value = objective.evaluate(&ActionString::from_ids([0])).unwrap();
        assert_abs_diff_eq!(value, 0.7, epsilon = 1e-15);
    }

    #[test]
    fn detection_decays_exponentially_with_distance() {
        // A unit-mass event at distance 5 from the sensor site (which
        // itself carries no mass).
        let grid =
            MissionGrid::from_points(vec![(1, 1), (4, 5)], vec![1.0, 0.0], 0.8).unwrap();
        let objective = CoverageObjective::new(grid, 1).unwrap();
        let value = objective.evaluate(&ActionString::from_ids([1])).unwrap();
        assert_abs_diff_eq!(value, (-0.8f64 * 5.0).exp(), epsilon = 1e-12);
    }

    #[test]
    fn two_sensor_value_matches_a_hand_rolled_sum() {
        let grid = MissionGrid::rectangular(3, 2, 1.0, MassKind::Uniform);
        let objective = CoverageObjective::new(grid.clone(), 2).unwrap();
        let placement = ActionString::from_ids([0, 4]); // sites (1,1), (3,1)
        let value = objective.evaluate(&placement).unwrap();

        let mut expected = 0.0;
        for &(x, y) in grid.points() {
            let mut miss = 1.0;
            for &(sx, sy) in &[(1i64, 1i64), (3, 1)] {
                let d = (((x - sx).pow(2) + (y - sy).pow(2)) as f64).sqrt();
                miss *= 1.0 - (-d).exp();
            }
            expected += 1.0 - miss;
        }
        assert_abs_diff_eq!(value, expected, epsilon = 1e-12);
    }

    #[test]
    fn placement_order_does_not_change_the_value() {
        let grid = MissionGrid::rectangular(4, 3, 0.7, MassKind::Linear);
        let objective = CoverageObjective::new(grid, 3).unwrap();
        let forward = objective.evaluate(&ActionString::from_ids([2, 7, 11])).unwrap();
        let backward = objective.evaluate(&ActionString::from_ids([11, 7, 2])).unwrap();
        let shuffled = objective.evaluate(&ActionString::from_ids([7, 11, 2])).unwrap();
        assert_abs_diff_eq!(forward, backward, epsilon = 1e-12);
        assert_abs_diff_eq!(forward, shuffled, epsilon = 1e-12);
    }

    #[test]
    fn coverage_is_monotone_and_below_total_mass() {
        let grid = MissionGrid::rectangular(4, 3, 0.5, MassKind::Linear);
        let objective = CoverageObjective::new(grid.clone(), 3).unwrap();
        let mut previous = 0.0;
        let mut s = ActionString::empty();
        for id in [5u32, 0, 11] {
            s.push(Symbol(id));
            let value = objective.evaluate(&s).unwrap();
            assert!(value >= previous);
            assert!(value <= grid.total_mass());
            previous = value;
        }
    }

    #[test]
    fn memo_overflow_does_not_change_values() {
        let grid = MissionGrid::rectangular(5, 4, 1.0, MassKind::Uniform);
        let objective = CoverageObjective::new(grid, 2).unwrap();
        let probe = ActionString::from_ids([0, 1]);
        let first = objective.evaluate(&probe).unwrap();
        // Evaluate more distinct placements than the memo holds, forcing at
        // least one clear-and-rebuild cycle.
        for a in 0..20u32 {
            for b in 0..20u32 {
                if a != b {
                    objective.evaluate(&ActionString::from_ids([a, b])).unwrap();
                }
            }
        }
        let second = objective.evaluate(&probe).unwrap();
        assert_eq!(first.to_bits(), second.to_bits());
    }

    #[test]
    fn evaluation_rejects_bad_strings() {
        let grid = MissionGrid::rectangular(2, 2, 1.0, MassKind::Uniform);
        let objective = CoverageObjective::new(grid, 2).unwrap();
        assert_eq!(
            objective.evaluate(&ActionString::from_ids([0, 1, 2])).unwrap_err(),
            ObjectiveError::StageOverflow { len: 3, horizon: 2 }
        );
        assert_eq!(
            objective.evaluate(&ActionString::from_ids([4])).unwrap_err(),
            ObjectiveError::InvalidSymbol { symbol: Symbol(4), ground_size: 4 }
        );
    }

    #[test]
    fn constructors_validate_their_inputs() {
        let grid = MissionGrid::rectangular(2, 2, 1.0, MassKind::Uniform);
        assert_eq!(
            CoverageObjective::new(grid.clone(), 5).unwrap_err(),
            ProblemError::InvalidHorizon { horizon: 5, sites: 4 }
        );
        assert!(coverage_constraint(&grid, 5).is_err());
        assert_eq!(
            MissionGrid::from_points(vec![], vec![], 1.0).unwrap_err(),
            ProblemError::EmptyGrid
        );
        assert_eq!(
            MissionGrid::from_points(vec![(0, 0)], vec![1.0, 2.0], 1.0).unwrap_err(),
            ProblemError::MassMismatch { points: 1, masses: 2 }
        );
        assert_eq!(
            MissionGrid::from_points(vec![(0, 0)], vec![-1.0], 1.0).unwrap_err(),
            ProblemError::InvalidMass { index: 0, value: -1.0 }
        );
        assert_eq!(
            MissionGrid::from_points(vec![(1, 2), (1, 2)], vec![1.0, 1.0], 1.0).unwrap_err(),
            ProblemError::DuplicatePoint { x: 1, y: 2 }
        );
        assert_eq!(
            MissionGrid::from_points(vec![(0, 0)], vec![1.0], 0.0).unwrap_err(),
            ProblemError::InvalidDecay(0.0)
        );
    }

    #[test]
    #[should_panic(expected = "decay rate")]
    fn rectangular_rejects_nonpositive_decay() {
        MissionGrid::rectangular(2, 2, 0.0, MassKind::Uniform);
    }
}
