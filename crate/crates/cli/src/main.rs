//! Command-line driver for greedy string optimization experiments: single
//! runs with machine-readable reports, parameter sweeps to CSV, and bound
//! verification against the exhaustive optimum.
//!
//! Exit codes: 0 on success, 1 on usage or configuration errors, 2 when a
//! certification detects a supported bound violated by the true ratio.

mod config;
mod engine;
mod report;

use std::path::{Path, PathBuf};

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

use config::{load_config, load_sweep, ConfigFile, Overrides};
use engine::{execute, OracleFailurePolicy};
use report::{csv_row, format_g10, write_csv, write_json, RunReport};

#[derive(Parser)]
#[command(
    name = "stringopt",
    version,
    about = "Greedy string optimization with certified performance bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment: greedy solve, curvature, bounds, assumption
    /// checks, and (within cap) exhaustive optimum plus certification.
    Run(CommonArgs),
    /// Run the base experiment across a list of parameter values, one CSV
    /// row per value.
    Sweep(CommonArgs),
    /// Certify every assumption-supported bound against the exhaustive
    /// optimum; fails if the feasible set exceeds the enumeration cap.
    Verify(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Path to the experiment or sweep configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output path. run: base for <out>.json and <out>.csv; sweep: the CSV
    /// path; verify: optional JSON report path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Force the exhaustive oracle on.
    #[arg(long, conflicts_with = "no_oracle")]
    oracle: bool,
    /// Skip the exhaustive oracle; report bounds only.
    #[arg(long)]
    no_oracle: bool,
    /// Cap on the number of feasible strings the oracle may enumerate.
    #[arg(long)]
    oracle_cap: Option<u64>,
    /// Tolerance for assumption inequalities.
    #[arg(long)]
    tol: Option<f64>,
    /// Seed recorded in reports; pins any randomized component.
    #[arg(long)]
    seed: Option<u64>,
}

impl CommonArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            run_oracle: if self.oracle {
                Some(true)
            } else if self.no_oracle {
                Some(false)
            } else {
                None
            },
            oracle_cap: self.oracle_cap,
            tolerance: self.tol,
            seed: self.seed,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests land here too; only real usage
            // errors take the nonzero path.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let result = match &cli.command {
        Command::Run(args) => run_command(args),
        Command::Sweep(args) => sweep_command(args),
        Command::Verify(args) => verify_command(args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}

/// 2 when any supported bound is violated by the true ratio, else 0.
fn exit_code_for(report: &RunReport) -> i32 {
    match &report.certification {
        Some(c) if !c.all_supported_satisfied => 2,
        _ => 0,
    }
}

fn config_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "experiment".to_string())
}

fn run_output_paths(args: &CommonArgs, file: &ConfigFile) -> (PathBuf, PathBuf) {
    if let Some(base) = &args.out {
        let base = base.display();
        return (
            PathBuf::from(format!("{base}.json")),
            PathBuf::from(format!("{base}.csv")),
        );
    }
    let stem = config_stem(&args.config);
    let json = file
        .out_json
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{stem}_report.json")));
    let csv = file
        .out_csv
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{stem}_summary.csv")));
    (json, csv)
}

fn print_summary(report: &RunReport) {
    println!(
        "greedy {}  f = {}",
        report.trace.chosen,
        format_g10(report.trace.greedy_value())
    );
    println!(
        "alpha_G = {}  beta1 = {}  beta2 = {}  beta_stepwise = {}",
        format_g10(report.bounds.alpha_g),
        format_g10(report.bounds.beta1),
        format_g10(report.bounds.beta2),
        format_g10(report.bounds.beta_stepwise)
    );
    println!(
        "assumptions: a1 {}, a2 {}, a3 {}",
        report.assumptions.a1.verdict,
        report.assumptions.a2.verdict,
        report.assumptions.a3.verdict
    );
    if let Some(warning) = &report.oracle_warning {
        eprintln!("warning: {warning}");
    }
    if let (Some(oracle), Some(certification)) = (&report.oracle, &report.certification) {
        println!(
            "optimum {}  f = {}  ratio = {}",
            oracle.best_string,
            format_g10(oracle.best_value),
            format_g10(certification.ratio)
        );
        println!(
            "certification: {}",
            if certification.all_supported_satisfied {
                "every supported bound satisfied"
            } else {
                "SUPPORTED BOUND VIOLATED"
            }
        );
    }
}

fn run_command(args: &CommonArgs) -> Result<i32> {
    let file = load_config(&args.config)?;
    let resolved = file.resolve(&args.overrides())?;
    let report = execute(&resolved, OracleFailurePolicy::DowngradeToBounds)?;
    let (json_path, csv_path) = run_output_paths(args, &file);
    write_json(&json_path, &report)?;
    write_csv(&csv_path, &[csv_row(&report, None)])?;
    print_summary(&report);
    println!("wrote {} and {}", json_path.display(), csv_path.display());
    Ok(exit_code_for(&report))
}

fn sweep_command(args: &CommonArgs) -> Result<i32> {
    let file = load_sweep(&args.config)?;
    let overrides = args.overrides();
    let mut rows = Vec::new();
    let mut worst = 0;
    for &value in &file.values {
        let resolved = file.derived(value, &overrides)?;
        let report = execute(&resolved, OracleFailurePolicy::DowngradeToBounds)?;
        worst = worst.max(exit_code_for(&report));
        if let Some(warning) = &report.oracle_warning {
            eprintln!("warning: {} = {}: {warning}", file.sweep.name(), format_g10(value));
        }
        println!(
            "{} = {}: f = {}, beta1 = {}, beta2 = {}",
            file.sweep.name(),
            format_g10(value),
            format_g10(report.trace.greedy_value()),
            format_g10(report.bounds.beta1),
            format_g10(report.bounds.beta2)
        );
        rows.push(csv_row(&report, Some(value)));
    }
    let csv_path = args
        .out
        .clone()
        .or_else(|| file.out.clone())
        .unwrap_or_else(|| PathBuf::from(format!("{}_sweep.csv", config_stem(&args.config))));
    write_csv(&csv_path, &rows)?;
    println!("wrote {}", csv_path.display());
    Ok(worst)
}

fn verify_command(args: &CommonArgs) -> Result<i32> {
    let file = load_config(&args.config)?;
    let mut overrides = args.overrides();
    overrides.run_oracle = Some(true);
    let resolved = file.resolve(&overrides)?;
    let report = execute(&resolved, OracleFailurePolicy::Fatal)?;
    let certification = report
        .certification
        .as_ref()
        .expect("verification always runs the oracle");
    println!(
        "greedy {} = {}  optimum {} = {}  ratio = {}",
        report.trace.chosen,
        format_g10(certification.greedy_value),
        report.oracle.as_ref().expect("oracle present").best_string,
        format_g10(certification.optimum_value),
        format_g10(certification.ratio)
    );
    for certificate in &certification.certificates {
        let status = if !certificate.supported {
            "uncertified (assumptions unverified)"
        } else if certificate.satisfied {
            "certified"
        } else {
            "VIOLATED"
        };
        let sign = if certificate.margin >= 0.0 { "+" } else { "" };
        println!(
            "{:<13} = {:<13} {status}  margin {sign}{}",
            certificate.bound.as_str(),
            format_g10(certificate.value),
            format_g10(certificate.margin)
        );
    }
    if let Some(out) = &args.out {
        write_json(out, &report)?;
        println!("wrote {}", out.display());
    }
    Ok(if certification.all_supported_satisfied { 0 } else { 2 })
}
