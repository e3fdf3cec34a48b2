//! Report assembly: the JSON report document, the fixed-schema CSV summary
//! row, and the shared significant-digit float printer.

use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use stringopt::bounds::{AssumptionReport, BoundsReport, Certification, CurvatureReport};
use stringopt::{GreedyTrace, OptimumReport};

use crate::config::{ProblemKind, ResolvedConfig};

/// Everything one experiment produced. Serializes to the JSON report; the
/// embedded trace suffices to recompute every bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    /// Fully-resolved parameters; reconstructing the instance from these
    /// and re-running reproduces the rest of the report.
    pub config: ResolvedConfig,
    pub trace: GreedyTrace,
    pub curvature: CurvatureReport,
    pub bounds: BoundsReport,
    pub assumptions: AssumptionReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OptimumReport>,
    /// Present when the oracle was requested but the feasible set exceeded
    /// the enumeration cap and the run downgraded to bounds only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_warning: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certification: Option<Certification>,
    pub runtime_ms: u128,
}

/// Column order of every CSV summary this tool emits.
pub const CSV_HEADER: [&str; 15] = [
    "param_value",
    "K",
    "lambda",
    "f_greedy",
    "alpha_G",
    "beta0",
    "beta_nemhauser",
    "beta1",
    "beta2",
    "beta_stepwise",
    "a1",
    "a2",
    "a3",
    "ratio",
    "runtime_ms",
];

/// Formats with at most 10 significant digits and trailing zeros trimmed,
/// switching to exponent notation outside printf's `%g` decimal range.
/// Pure function of the bits, so identical inputs give identical text.
pub fn format_g10(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-4..10).contains(&exponent) {
        let decimals = (9 - exponent).max(0) as usize;
        let mut s = format!("{x:.decimals$}");
        if s.contains('.') {
            while s.ends_with('0') {
                s.pop();
            }
            if s.ends_with('.') {
                s.pop();
            }
        }
        s
    } else {
        let s = format!("{x:.9e}");
        let (mantissa, exp) = s.split_once('e').expect("exponent format");
        let mantissa = if mantissa.contains('.') {
            mantissa.trim_end_matches('0').trim_end_matches('.')
        } else {
            mantissa
        };
        format!("{mantissa}e{exp}")
    }
}

/// The fixed-schema summary row for one report. `param_value` is the swept
/// value for sweep rows and blank for standalone runs; `lambda` is blank
/// for scheduling instances; `ratio` is blank without an oracle result.
pub fn csv_row(report: &RunReport, param_value: Option<f64>) -> Vec<String> {
    let lambda = match report.config.problem {
        ProblemKind::Coverage => {
            let grid = report.config.grid.expect("coverage config carries a grid");
            format_g10(grid.lambda)
        }
        ProblemKind::Scheduling => String::new(),
    };
    let ratio = report
        .certification
        .as_ref()
        .map(|c| format_g10(c.ratio))
        .unwrap_or_default();
    vec![
        param_value.map(format_g10).unwrap_or_default(),
        report.bounds.horizon.to_string(),
        lambda,
        format_g10(report.trace.greedy_value()),
        format_g10(report.bounds.alpha_g),
        format_g10(report.bounds.beta0),
        format_g10(report.bounds.beta_nemhauser),
        format_g10(report.bounds.beta1),
        format_g10(report.bounds.beta2),
        format_g10(report.bounds.beta_stepwise),
        report.assumptions.a1.verdict.as_str().to_string(),
        report.assumptions.a2.verdict.as_str().to_string(),
        report.assumptions.a3.verdict.as_str().to_string(),
        ratio,
        report.runtime_ms.to_string(),
    ]
}

fn ensure_parent(path: &Path) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .with_context(|| format!("creating directory {}", parent.display()))?;
        }
    }
    Ok(())
}

/// Writes header plus rows as UTF-8 CSV with LF line endings.
pub fn write_csv(path: &Path, rows: &[Vec<String>]) -> Result<()> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).context("writing CSV header")?;
    for row in rows {
        writer.write_record(row).context("writing CSV row")?;
    }
    let bytes = writer.into_inner().context("flushing CSV")?;
    ensure_parent(path)?;
    std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

/// Writes a pretty-printed JSON document with a trailing newline.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).context("serializing JSON")?;
    text.push('\n');
    ensure_parent(path)?;
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
