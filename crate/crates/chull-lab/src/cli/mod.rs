//! Command implementations behind the `chull-lab` binary: experiment
//! execution with file outputs, fitting from records files, verification
//! suites, and a debug sampler dump.

pub mod csvio;
pub mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

use crate::experiments::{
    aggregate, fit, parse_region, run, ExperimentConfig, FitModel, FitResult,
};
use crate::sampling::substream;

/// Errors carry the process exit code: 1 for I/O, 2 for configuration,
/// 3 for a failed verification suite.
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Config(String),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Config(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "io error: {m}"),
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

#[derive(Debug, Serialize)]
struct Manifest<'a> {
    config: &'a ExperimentConfig,
    version: &'static str,
    wall_time_seconds: f64,
    records: usize,
}

#[derive(Debug)]
pub struct RunOutput {
    pub records_path: PathBuf,
    pub aggregates_path: PathBuf,
    pub manifest_path: PathBuf,
    pub record_count: usize,
}

/// Execute the configured experiment and write records CSV, aggregates CSV
/// and a manifest JSON into `out_dir` (each atomically: temp file + rename).
/// `threads = 0` uses the default worker count; the outputs are identical
/// for every value.
pub fn cmd_run(
    config: &ExperimentConfig,
    out_dir: &Path,
    threads: usize,
) -> Result<RunOutput, CliError> {
    config
        .validate()
        .map_err(|e| CliError::Config(e.to_string()))?;
    for w in config.warnings() {
        eprintln!("warning: {w}");
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let started = Instant::now();
    let records = pool
        .install(|| run(config))
        .map_err(|e| CliError::Config(e.to_string()))?;
    let wall = started.elapsed().as_secs_f64();
    let rows = aggregate(&records);

    fs::create_dir_all(out_dir).map_err(|e| CliError::Io(e.to_string()))?;
    let records_path = out_dir.join("records.csv");
    let aggregates_path = out_dir.join("aggregates.csv");
    let manifest_path = out_dir.join("manifest.json");
    csvio::write_atomic(&records_path, &csvio::records_csv(config, &records))
        .map_err(|e| CliError::Io(e.to_string()))?;
    csvio::write_atomic(&aggregates_path, &csvio::aggregates_csv(&rows))
        .map_err(|e| CliError::Io(e.to_string()))?;
    let manifest = Manifest {
        config,
        version: env!("CARGO_PKG_VERSION"),
        wall_time_seconds: wall,
        records: records.len(),
    };
    let manifest_json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    csvio::write_atomic(&manifest_path, &format!("{manifest_json}\n"))
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(RunOutput {
        records_path,
        aggregates_path,
        manifest_path,
        record_count: records.len(),
    })
}

#[derive(Debug, Serialize)]
pub struct FitOutput {
    pub model: FitModel,
    pub a: f64,
    pub b: f64,
    pub stderr_b: f64,
    pub r_squared: f64,
    pub n_values: Vec<u64>,
}

/// Fit a growth model to a records file; never re-samples. Optionally writes
/// the fit JSON and an SVG scatter with the fitted line.
pub fn cmd_fit(
    records_path: &Path,
    model: FitModel,
    json_out: Option<&Path>,
    svg_out: Option<&Path>,
) -> Result<FitOutput, CliError> {
    let contents = fs::read_to_string(records_path).map_err(|e| CliError::Io(e.to_string()))?;
    let (meta, records) = csvio::parse_records_csv(&contents).map_err(CliError::Config)?;
    let rows = aggregate(&records);
    let result: FitResult = fit(&rows, model).map_err(|e| CliError::Config(e.to_string()))?;
    let output = FitOutput {
        model: result.model,
        a: result.a,
        b: result.b,
        stderr_b: result.stderr_b,
        r_squared: result.r_squared,
        n_values: rows.iter().map(|r| r.n).collect(),
    };
    let json = serde_json::to_string_pretty(&output).expect("fit serializes");
    if let Some(path) = json_out {
        csvio::write_atomic(path, &format!("{json}\n")).map_err(|e| CliError::Io(e.to_string()))?;
    }
    if let Some(path) = svg_out {
        let title = if meta.directions.is_empty() {
            format!("{}, {}", meta.statistic, meta.region)
        } else {
            format!("{}, {}, {}", meta.statistic, meta.region, meta.directions)
        };
        let rendered = svg::render_fit_svg(&rows, &result, &title);
        csvio::write_atomic(path, &rendered).map_err(|e| CliError::Io(e.to_string()))?;
    }
    Ok(output)
}

/// Debug sampler dump: `n` draws from the region under the given substream,
/// one comma-separated point per line.
pub fn cmd_sample(region_spec: &str, n: usize, seed: u64, index: u64) -> Result<String, CliError> {
    let region = parse_region(region_spec).map_err(CliError::Config)?;
    let mut rng = substream(seed, index);
    let mut out = String::new();
    for _ in 0..n {
        let p = region.sample(&mut rng).into_pointd();
        let line: Vec<String> = p.coords.iter().map(|c| csvio::fmt_value(*c)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    Ok(out)
}

/// Run one named verification suite; the report carries per-check lines.
pub fn cmd_verify(suite: &str, threads: usize) -> Result<crate::suites::SuiteReport, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let report = pool
        .install(|| crate::suites::run_suite(suite))
        .ok_or_else(|| {
            CliError::Config(format!(
                "unknown suite `{suite}` (expected one of: {})",
                crate::suites::CLI_SUITES.join(", ")
            ))
        })?;
    Ok(report)
}
