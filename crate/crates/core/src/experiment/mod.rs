//! Config-driven experiment runs.
//!
//! [`run`] executes one scenario and writes four artifacts to the output
//! directory:
//!
//! - `manifest.json`: the config echo, resolved rate battery and thresholds,
//!   tool version.
//! - `curves.csv`: `series,n,value`.
//! - `ratios.csv`: `series,path,checkpoint,maxRatio` (rate tests only; header
//!   otherwise).
//! - `verdict.json`: scenario results and evaluated `expect.*` checks.
//!
//! CSV files open with a `#` provenance line; JSON files carry a
//! `provenance` object. Nothing depends on wall-clock time, so identical
//! configs give byte-identical artifacts.
//!
//! The output directory is, in order of preference, `$GRWALK_OUT`, the
//! config's `output` key, or `out/<name>`.

mod config;
pub mod presets;
mod scenarios;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use thiserror::Error;

pub use config::{parse_weight, ExperimentConfig, Scenario, VectorSpec};
pub use scenarios::{build_group, build_rep};

use crate::analysis::AnalysisError;
use crate::group::GroupError;
use crate::measure::MeasureError;
use crate::padic::FieldError;
use crate::rep::RepError;
use crate::walk::WalkError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const OUTPUT_ENV: &str = "GRWALK_OUT";

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("{} check(s) failed: {}", .0.len(), .0.join("; "))]
    CheckFailed(Vec<String>),
    #[error("cannot write artifacts: {0}")]
    Io(#[from] std::io::Error),
}

impl ExperimentError {
    /// 1 for config and I/O problems, 2 for numerical failures, 3 for failed
    /// checks.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) | Self::Io(_) => 1,
            Self::Numerical(_) => 2,
            Self::CheckFailed(_) => 3,
        }
    }
}

impl From<FieldError> for ExperimentError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::InvalidParameters(_) | FieldError::PrimeMismatch(..) => {
                Self::Config(e.to_string())
            }
            _ => Self::Numerical(e.to_string()),
        }
    }
}

impl From<GroupError> for ExperimentError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Field(f) => f.into(),
            other => Self::Config(other.to_string()),
        }
    }
}

impl From<MeasureError> for ExperimentError {
    fn from(e: MeasureError) -> Self {
        Self::Config(e.to_string())
    }
}

impl From<RepError> for ExperimentError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::WindowOverflow { .. }
            | RepError::Resolution { .. }
            | RepError::SpanDiverged(_) => Self::Numerical(e.to_string()),
            RepError::Field(f) => f.into(),
            RepError::Group(g) => g.into(),
            other => Self::Config(other.to_string()),
        }
    }
}

impl From<WalkError> for ExperimentError {
    fn from(e: WalkError) -> Self {
        match e {
            WalkError::Rep(r) => r.into(),
            other => Self::Config(other.to_string()),
        }
    }
}

impl From<AnalysisError> for ExperimentError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Rep(r) => r.into(),
            AnalysisError::Walk(w) => w.into(),
            AnalysisError::Measure(m) => m.into(),
            AnalysisError::Group(g) => g.into(),
            other => Self::Config(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveRow {
    pub series: String,
    pub n: usize,
    pub value: f64,
}

impl CurveRow {
    fn new(series: &str, n: usize, value: f64) -> Self {
        Self {
            series: series.to_string(),
            n,
            value,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioRow {
    pub series: String,
    pub path: u64,
    pub checkpoint: usize,
    pub max_ratio: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything a scenario produces, before it is written out.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub curves: Vec<CurveRow>,
    pub ratios: Vec<RatioRow>,
    pub verdict: Value,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect()
    }
}

#[derive(Debug)]
pub struct RunOutcome {
    pub output_dir: PathBuf,
    pub report: Report,
}

/// Computes a scenario without touching the filesystem.
pub fn execute(config: &ExperimentConfig) -> Result<Report, ExperimentError> {
    scenarios::execute(config)
}

/// A preset name or a path to a config file.
pub fn resolve(target: &str) -> Result<ExperimentConfig, ExperimentError> {
    match presets::find(target) {
        Some(_) => presets::load(target),
        None => ExperimentConfig::load(Path::new(target)),
    }
}

pub fn output_dir(config: &ExperimentConfig) -> PathBuf {
    match std::env::var_os(OUTPUT_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => config
            .output
            .clone()
            .unwrap_or_else(|| Path::new("out").join(&config.name)),
    }
}

pub fn run(config: &ExperimentConfig) -> Result<RunOutcome, ExperimentError> {
    run_into(config, &output_dir(config))
}

pub fn run_into(config: &ExperimentConfig, dir: &Path) -> Result<RunOutcome, ExperimentError> {
    let report = execute(config)?;
    write_artifacts(config, &report, dir)?;
    Ok(RunOutcome {
        output_dir: dir.to_path_buf(),
        report,
    })
}

/// Runs and fails with [`ExperimentError::CheckFailed`] unless every
/// `expect.*` check passes.
pub fn check(config: &ExperimentConfig) -> Result<RunOutcome, ExperimentError> {
    let outcome = run(config)?;
    let failures = outcome.report.failures();
    if failures.is_empty() {
        Ok(outcome)
    } else {
        Err(ExperimentError::CheckFailed(failures))
    }
}

fn provenance(config: &ExperimentConfig) -> Value {
    json!({
        "preset": config.name,
        "scenario": config.scenario.name(),
        "seed": config.seed,
        "tool": "grwalk",
        "version": VERSION,
        "modules": {
            "padic": VERSION,
            "group": VERSION,
            "measure": VERSION,
            "rep": VERSION,
            "walk": VERSION,
            "analysis": VERSION,
            "experiment": VERSION,
        },
        "rng": "ChaCha8 (rand_chacha 0.9), seed_from_u64(seed), stream = path index",
    })
}

fn provenance_line(config: &ExperimentConfig) -> String {
    format!(
        "# preset={} scenario={} seed={} grwalk={VERSION} rng=chacha8\n",
        config.name,
        config.scenario.name(),
        config.seed
    )
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn write_artifacts(config: &ExperimentConfig, report: &Report, dir: &Path) -> Result<(), ExperimentError> {
    std::fs::create_dir_all(dir)?;

    let manifest = json!({
        "provenance": provenance(config),
        "config": config
            .entries
            .iter()
            .map(|(k, v)| json!({ "key": k, "value": v }))
            .collect::<Vec<_>>(),
        "rates": config.rates.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "thresholds": config.thresholds,
        "artifacts": ["manifest.json", "curves.csv", "ratios.csv", "verdict.json"],
    });
    std::fs::write(dir.join("manifest.json"), pretty(&manifest)?)?;

    let mut curves = provenance_line(config);
    curves.push_str("series,n,value\n");
    for row in &report.curves {
        let _ = writeln!(curves, "{},{},{}", csv_field(&row.series), row.n, row.value);
    }
    std::fs::write(dir.join("curves.csv"), curves)?;

    let mut ratios = provenance_line(config);
    ratios.push_str("series,path,checkpoint,maxRatio\n");
    for row in &report.ratios {
        let _ = writeln!(
            ratios,
            "{},{},{},{}",
            csv_field(&row.series),
            row.path,
            row.checkpoint,
            row.max_ratio
        );
    }
    std::fs::write(dir.join("ratios.csv"), ratios)?;

    let verdict = json!({
        "provenance": provenance(config),
        "result": report.verdict,
        "checks": report
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
        "all_checks_passed": report.checks.iter().all(|c| c.passed),
    });
    std::fs::write(dir.join("verdict.json"), pretty(&verdict)?)?;
    Ok(())
}

fn pretty(value: &Value) -> Result<String, ExperimentError> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| ExperimentError::Numerical(e.to_string()))
}
