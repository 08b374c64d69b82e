use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use chull_lab::cli::{self, CliError};
use chull_lab::experiments::{ExperimentConfig, FitModel, Statistic};

#[derive(Parser)]
#[command(
    name = "chull-lab",
    version,
    about = "Convex and directed hull experiments: run statistics over seeded \
             random point sets, fit growth laws, verify the expected-complexity suites"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment and write records.csv, aggregates.csv, manifest.json.
    Run {
        /// JSON config file; flags below override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Statistic, e.g. hull_vertices, dch_boundary_count, nsc_count.
        #[arg(long)]
        stat: Option<String>,
        /// Region: disk | square | triangle | kgon:K | cube:D.
        #[arg(long)]
        region: Option<String>,
        /// Directions: dxy | dxy45 | equal:K | angles:a1,a2,...
        #[arg(long)]
        directions: Option<String>,
        /// Point dimension (cross-checked against cube regions).
        #[arg(long)]
        d: Option<usize>,
        /// Comma-separated strictly increasing sample sizes, e.g. 1024,4096.
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output directory.
        #[arg(long, default_value = "runs")]
        out: PathBuf,
        /// Worker threads (default: CHULL_LAB_THREADS or all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Fit a growth model to a records.csv; optionally emit JSON and SVG.
    Fit {
        records: PathBuf,
        /// power | log | polylog.
        #[arg(long)]
        model: String,
        /// Write the fit JSON here (default: stdout only).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a scatter + fitted-line SVG here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run a named verification suite and exit 0 on pass, 3 on failure.
    Verify {
        /// One of: oracles, disk_exponent, square_log, kgon, dch_alpha,
        /// corollary_prob, quadrant_polylog, efron, big_disk.
        suite: String,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Dump sampler output for debugging, one point per line.
    Sample {
        #[arg(long)]
        region: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Substream index.
        #[arg(long, default_value_t = 0)]
        index: u64,
    },
}

/// Precedence: --threads flag, CHULL_LAB_THREADS, then the config's
/// advisory parallelism; 0 lets the pool pick.
fn resolve_threads(flag: Option<usize>, advisory: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("CHULL_LAB_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .or(advisory)
    .unwrap_or(0)
}

#[allow(clippy::too_many_arguments)]
fn build_config(
    config_path: Option<&PathBuf>,
    stat: Option<String>,
    region: Option<String>,
    directions: Option<String>,
    d: Option<usize>,
    n: Option<String>,
    trials: Option<u64>,
    seed: Option<u64>,
) -> Result<ExperimentConfig, CliError> {
    let mut config = match config_path {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(e.to_string()))?;
            serde_json::from_str::<ExperimentConfig>(&text)
                .map_err(|e| CliError::Config(format!("bad config file: {e}")))?
        }
        None => {
            let stat = stat
                .as_deref()
                .ok_or_else(|| CliError::Config("field `stat`: required".into()))?
                .parse::<Statistic>()
                .map_err(|e| CliError::Config(format!("field `stat`: {e}")))?;
            let n = n
                .as_deref()
                .ok_or_else(|| CliError::Config("field `n`: required".into()))?;
            ExperimentConfig {
                statistic: stat,
                region: region.clone().unwrap_or_else(|| "disk".into()),
                directions: None,
                dimension: None,
                n_grid: parse_n_list(n)?,
                trials: trials.unwrap_or(8),
                master_seed: seed.unwrap_or(0),
                parallelism: None,
            }
        }
    };
    // Flags override config-file fields.
    if config_path.is_some() {
        if let Some(s) = stat {
            config.statistic = s
                .parse()
                .map_err(|e| CliError::Config(format!("field `stat`: {e}")))?;
        }
        if let Some(r) = region {
            config.region = r;
        }
        if let Some(list) = n {
            config.n_grid = parse_n_list(&list)?;
        }
        if let Some(t) = trials {
            config.trials = t;
        }
        if let Some(s) = seed {
            config.master_seed = s;
        }
    }
    if let Some(dir) = directions {
        config.directions = Some(dir);
    }
    if let Some(dim) = d {
        config.dimension = Some(dim);
    }
    Ok(config)
}

fn parse_n_list(list: &str) -> Result<Vec<u64>, CliError> {
    list.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Config(format!("field `n`: bad entry `{s}`")))
        })
        .collect()
}

fn real_main() -> Result<(), CliError> {
    let args = Args::parse();
    match args.command {
        Command::Run {
            config,
            stat,
            region,
            directions,
            d,
            n,
            trials,
            seed,
            out,
            threads,
        } => {
            let cfg = build_config(
                config.as_ref(),
                stat,
                region,
                directions,
                d,
                n,
                trials,
                seed,
            )?;
            let output = cli::cmd_run(&cfg, &out, resolve_threads(threads, cfg.parallelism))?;
            println!(
                "wrote {} ({} records), {}, {}",
                output.records_path.display(),
                output.record_count,
                output.aggregates_path.display(),
                output.manifest_path.display()
            );
            Ok(())
        }
        Command::Fit {
            records,
            model,
            out,
            svg,
        } => {
            let model: FitModel = model.parse().map_err(|e: String| CliError::Config(e))?;
            let fit = cli::cmd_fit(&records, model, out.as_deref(), svg.as_deref())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&fit).expect("fit serializes")
            );
            Ok(())
        }
        Command::Verify { suite, threads } => {
            let report = cli::cmd_verify(&suite, resolve_threads(threads, None))?;
            print!("{}", report.render());
            if report.pass() {
                println!("{}: PASS", suite);
                Ok(())
            } else {
                Err(CliError::Verification(format!("suite {suite} failed")))
            }
        }
        Command::Sample {
            region,
            n,
            seed,
            index,
        } => {
            let dump = cli::cmd_sample(&region, n, seed, index)?;
            print!("{dump}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match real_main() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
