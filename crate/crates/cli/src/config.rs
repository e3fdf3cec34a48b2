//! Experiment and sweep configuration: the on-disk JSON schemas, their
//! validation, and resolution into fully-pinned experiment descriptions.

use std::path::{Path, PathBuf};

use anyhow::{ensure, Context, Result};
use serde::{Deserialize, Serialize};
use stringopt::bounds::DEFAULT_TOLERANCE;
use stringopt::problems::{MassKind, SuccessMatrix};
use stringopt::DEFAULT_ORACLE_CAP;

/// Which objective family an experiment instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    /// Agents assigned to successive task stages; success-probability
    /// objective over a no-repeat constraint.
    Scheduling,
    /// Sensors placed on a rectangular lattice; expected event-detection
    /// mass objective over a no-repeat constraint.
    Coverage,
}

/// Rectangular-lattice parameters for a coverage instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridParams {
    pub width: usize,
    pub height: usize,
    /// Exponential decay rate of detection probability with distance.
    pub lambda: f64,
    /// Event-mass profile over the lattice.
    pub mass: MassKind,
}

/// On-disk experiment description. Optional fields fall back to defaults
/// during resolution; command-line flags override file values.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub problem: ProblemKind,
    /// Per-agent, per-stage success probabilities (scheduling only).
    #[serde(default)]
    pub matrix: Option<Vec<Vec<f64>>>,
    /// Lattice parameters (coverage only).
    #[serde(default)]
    pub grid: Option<GridParams>,
    /// Number of greedy steps. Defaults to the matrix stage count for
    /// scheduling; required for coverage.
    #[serde(default)]
    pub horizon: Option<usize>,
    #[serde(default)]
    pub run_oracle: Option<bool>,
    #[serde(default)]
    pub oracle_cap: Option<u64>,
    #[serde(default)]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub seed: Option<u64>,
    /// Destination of the JSON report (run subcommand).
    #[serde(default)]
    pub out_json: Option<PathBuf>,
    /// Destination of the one-row CSV summary (run subcommand).
    #[serde(default)]
    pub out_csv: Option<PathBuf>,
}

/// Command-line flag values layered over a config file.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub run_oracle: Option<bool>,
    pub oracle_cap: Option<u64>,
    pub tolerance: Option<f64>,
    pub seed: Option<u64>,
}

/// A fully-specified experiment: every parameter pinned, the instance
/// reconstructible from this value alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolvedConfig {
    pub problem: ProblemKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridParams>,
    pub horizon: usize,
    pub run_oracle: bool,
    pub oracle_cap: u64,
    pub tolerance: f64,
    pub seed: u64,
}

pub fn load_config(path: &Path) -> Result<ConfigFile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
}

impl ConfigFile {
    /// Fills defaults, applies flag overrides, and validates every
    /// parameter so instance construction downstream cannot fail.
    pub fn resolve(&self, overrides: &Overrides) -> Result<ResolvedConfig> {
        let tolerance = overrides
            .tolerance
            .or(self.tolerance)
            .unwrap_or(DEFAULT_TOLERANCE);
        ensure!(
            tolerance.is_finite() && tolerance >= 0.0,
            "tolerance must be finite and nonnegative, got {tolerance}"
        );
        let oracle_cap = overrides
            .oracle_cap
            .or(self.oracle_cap)
            .unwrap_or(DEFAULT_ORACLE_CAP);
        ensure!(oracle_cap >= 1, "oracle_cap must be at least 1");
        let run_oracle = overrides.run_oracle.or(self.run_oracle).unwrap_or(true);
        let seed = overrides.seed.or(self.seed).unwrap_or(0);

        match self.problem {
            ProblemKind::Scheduling => {
                ensure!(
                    self.grid.is_none(),
                    "field `grid` is only valid for coverage problems"
                );
                let rows = self
                    .matrix
                    .clone()
                    .context("scheduling config requires field `matrix`")?;
                let matrix = SuccessMatrix::new(rows).context("invalid `matrix`")?;
                let horizon = self.horizon.unwrap_or_else(|| matrix.n_stages());
                ensure!(horizon >= 1, "horizon must be at least 1");
                ensure!(
                    horizon <= matrix.n_stages(),
                    "horizon {horizon} exceeds the matrix's {} stages",
                    matrix.n_stages()
                );
                let matrix = matrix
                    .truncated(horizon)
                    .context("truncating matrix to horizon")?;
                Ok(ResolvedConfig {
                    problem: ProblemKind::Scheduling,
                    matrix: Some(matrix.rows().to_vec()),
                    grid: None,
                    horizon,
                    run_oracle,
                    oracle_cap,
                    tolerance,
                    seed,
                })
            }
            ProblemKind::Coverage => {
                ensure!(
                    self.matrix.is_none(),
                    "field `matrix` is only valid for scheduling problems"
                );
                let grid = self
                    .grid
                    .context("coverage config requires field `grid`")?;
                ensure!(grid.width >= 1, "grid width must be at least 1");
                ensure!(grid.height >= 1, "grid height must be at least 1");
                ensure!(
                    grid.lambda.is_finite() && grid.lambda > 0.0,
                    "grid lambda must be finite and positive, got {}",
                    grid.lambda
                );
                let sites = grid.width * grid.height;
                let horizon = self
                    .horizon
                    .context("coverage config requires field `horizon`")?;
                ensure!(horizon >= 1, "horizon must be at least 1");
                ensure!(
                    horizon <= sites,
                    "horizon {horizon} exceeds the grid's {sites} sites"
                );
                Ok(ResolvedConfig {
                    problem: ProblemKind::Coverage,
                    matrix: None,
                    grid: Some(grid),
                    horizon,
                    run_oracle,
                    oracle_cap,
                    tolerance,
                    seed,
                })
            }
        }
    }
}

/// Which experiment parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepParam {
    /// Detection decay rate (coverage only).
    Lambda,
    /// Horizon, i.e. the number of greedy steps.
    K,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::Lambda => "lambda",
            SweepParam::K => "K",
        }
    }
}

/// On-disk sweep description: a base experiment plus a strictly increasing
/// list of values for one parameter.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepFile {
    pub sweep: SweepParam,
    pub values: Vec<f64>,
    pub base: ConfigFile,
    /// Destination of the sweep CSV.
    #[serde(default)]
    pub out: Option<PathBuf>,
}

pub fn load_sweep(path: &Path) -> Result<SweepFile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading sweep file {}", path.display()))?;
    let sweep: SweepFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing sweep file {}", path.display()))?;
    sweep.validate()?;
    Ok(sweep)
}

impl SweepFile {
    fn validate(&self) -> Result<()> {
        ensure!(!self.values.is_empty(), "sweep value list must be nonempty");
        for pair in self.values.windows(2) {
            ensure!(
                pair[0] < pair[1],
                "sweep values must be strictly increasing, got {} before {}",
                pair[0],
                pair[1]
            );
        }
        match self.sweep {
            SweepParam::Lambda => {
                ensure!(
                    self.base.problem == ProblemKind::Coverage,
                    "a lambda sweep requires a coverage base problem"
                );
                for &value in &self.values {
                    ensure!(
                        value.is_finite() && value > 0.0,
                        "lambda values must be finite and positive, got {value}"
                    );
                }
            }
            SweepParam::K => {
                for &value in &self.values {
                    ensure!(
                        value.fract() == 0.0 && value >= 1.0 && value <= 1e9,
                        "K values must be integers of at least 1, got {value}"
                    );
                }
            }
        }
        Ok(())
    }

    /// The base experiment with the swept parameter set to `value`.
    pub fn derived(&self, value: f64, overrides: &Overrides) -> Result<ResolvedConfig> {
        let mut base = self.base.clone();
        match self.sweep {
            SweepParam::Lambda => {
                let grid = base
                    .grid
                    .as_mut()
                    .context("lambda sweep base config requires field `grid`")?;
                grid.lambda = value;
            }
            SweepParam::K => {
                base.horizon = Some(value as usize);
            }
        }
        base.resolve(overrides)
            .with_context(|| format!("sweep value {} = {value}", self.sweep.name()))
    }
}
