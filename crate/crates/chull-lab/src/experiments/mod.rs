//! The Monte Carlo harness: run a statistic over an n-grid with many seeded
//! trials, aggregate per n, fit growth laws, and evaluate the special-purpose
//! probability checks (Efron inequality, adjacent-cell event probability).
//!
//! Every (n, trial) cell draws from its own substream keyed by a fixed hash
//! of `(n, trial)`, so results are independent of scheduling and of which
//! other grid entries are present.

mod fit;

pub use fit::{fit, linear_fit, FitError, FitModel, FitResult, LinearFit};

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::directed::{self, DirectionSet};
use crate::geom::{convex_hull, polygon_area, Point2};
use crate::orthant;
use crate::sampling::{mix64, substream, Region, RngStream};
use crate::tilings;

/// Monte Carlo probes per trial for directed-hull area estimation.
pub const DCH_AREA_PROBES: usize = 4096;
/// Bisection tolerance for the contained-radius statistic.
pub const MIN_RADIUS_TOL: f64 = 1e-4;
/// Circle probes for the contained-radius statistic.
pub const MIN_RADIUS_PROBES: usize = 720;

#[derive(Debug, Error, PartialEq)]
#[error("config error: field `{field}`: {message}")]
pub struct ConfigError {
    pub field: &'static str,
    pub message: String,
}

fn cfg_err(field: &'static str, message: impl Into<String>) -> ConfigError {
    ConfigError {
        field,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    HullVertices,
    HullAreaDeficit,
    DchBoundaryCount,
    DchAreaDeficit,
    NscCount,
    MaximaCount,
    ExposedTiles,
    FirstOccupiedMean,
    MinContainedRadius,
    CorollaryEventProb,
}

impl Statistic {
    pub fn name(&self) -> &'static str {
        match self {
            Statistic::HullVertices => "hull_vertices",
            Statistic::HullAreaDeficit => "hull_area_deficit",
            Statistic::DchBoundaryCount => "dch_boundary_count",
            Statistic::DchAreaDeficit => "dch_area_deficit",
            Statistic::NscCount => "nsc_count",
            Statistic::MaximaCount => "maxima_count",
            Statistic::ExposedTiles => "exposed_tiles",
            Statistic::FirstOccupiedMean => "first_occupied_mean",
            Statistic::MinContainedRadius => "min_contained_radius",
            Statistic::CorollaryEventProb => "corollary_event_prob",
        }
    }

    pub fn needs_directions(&self) -> bool {
        matches!(
            self,
            Statistic::DchBoundaryCount | Statistic::DchAreaDeficit | Statistic::MinContainedRadius
        )
    }
}

impl std::str::FromStr for Statistic {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| format!("unknown statistic `{s}`"))
    }
}

/// Run specification. Region and direction specs are kept in their textual
/// form so configs round-trip through files and manifests unchanged.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ExperimentConfig {
    pub statistic: Statistic,
    pub region: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub directions: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    pub n_grid: Vec<u64>,
    pub trials: u64,
    pub master_seed: u64,
    /// Advisory worker count; results are identical for any value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parallelism: Option<usize>,
}

/// Parse a region spec: `disk`, `square`, `triangle`, `kgon:K`, `cube:D`.
pub fn parse_region(spec: &str) -> Result<Region, String> {
    match spec {
        "disk" => Ok(Region::disk(1.0).unwrap()),
        "square" => Ok(Region::hypercube(2, 1.0).unwrap()),
        "triangle" => Ok(Region::triangle(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        )
        .unwrap()),
        other => {
            if let Some(k) = other.strip_prefix("kgon:") {
                let k: usize = k.parse().map_err(|_| format!("bad k-gon spec `{other}`"))?;
                if k < 3 {
                    return Err("k-gon needs k >= 3".into());
                }
                let verts: Vec<Point2> = (0..k)
                    .map(|i| {
                        let a = std::f64::consts::TAU * i as f64 / k as f64;
                        Point2::new(a.cos(), a.sin())
                    })
                    .collect();
                let poly = crate::geom::ConvexPolygon::new(verts)
                    .map_err(|e| format!("bad k-gon: {e}"))?;
                Ok(Region::polygon(poly).unwrap())
            } else if let Some(d) = other.strip_prefix("cube:") {
                let d: usize = d.parse().map_err(|_| format!("bad cube spec `{other}`"))?;
                Region::hypercube(d, 1.0).map_err(|e| e.to_string())
            } else {
                Err(format!("unknown region `{other}`"))
            }
        }
    }
}

/// Parse a direction spec: `dxy`, `dxy45`, `equal:K`, `angles:a1,a2,...`
/// (radians, auto-closed under negation).
pub fn parse_directions(spec: &str) -> Result<DirectionSet, String> {
    match spec {
        "dxy" => Ok(DirectionSet::axis_parallel()),
        "dxy45" => Ok(DirectionSet::axis_parallel_rot45()),
        other => {
            if let Some(k) = other.strip_prefix("equal:") {
                let k: usize = k
                    .parse()
                    .map_err(|_| format!("bad direction spec `{other}`"))?;
                if k == 0 {
                    return Err("equal:k needs k >= 1".into());
                }
                Ok(DirectionSet::equally_spaced(k))
            } else if let Some(list) = other.strip_prefix("angles:") {
                let angles: Result<Vec<f64>, _> =
                    list.split(',').map(|s| s.trim().parse::<f64>()).collect();
                let angles = angles.map_err(|_| format!("bad angle list `{list}`"))?;
                directed::make_direction_set(&angles, true).map_err(|e| e.to_string())
            } else {
                Err(format!("unknown direction spec `{other}`"))
            }
        }
    }
}

/// Resolved run inputs after validation.
struct ResolvedConfig {
    region: Region,
    directions: Option<DirectionSet>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.resolve().map(|_| ())
    }

    fn resolve(&self) -> Result<ResolvedConfig, ConfigError> {
        if self.n_grid.is_empty() {
            return Err(cfg_err("n_grid", "must be nonempty"));
        }
        if !self.n_grid.windows(2).all(|w| w[0] < w[1]) {
            return Err(cfg_err("n_grid", "must be strictly increasing"));
        }
        if self.n_grid[0] == 0 {
            return Err(cfg_err("n_grid", "entries must be >= 1"));
        }
        if self.trials < 1 {
            return Err(cfg_err("trials", "must be >= 1"));
        }
        let region = parse_region(&self.region).map_err(|m| cfg_err("region", m))?;
        let directions = match &self.directions {
            Some(spec) => Some(parse_directions(spec).map_err(|m| cfg_err("directions", m))?),
            None => None,
        };
        if self.statistic.needs_directions() && directions.is_none() {
            return Err(cfg_err(
                "directions",
                format!("required for statistic {}", self.statistic.name()),
            ));
        }
        match self.statistic {
            Statistic::NscCount | Statistic::MaximaCount => {
                let d = match &region {
                    Region::Hypercube { dim, .. } => *dim,
                    _ => {
                        return Err(cfg_err(
                            "region",
                            "nsc_count/maxima_count need a square or cube:D region",
                        ))
                    }
                };
                if let Some(want) = self.dimension {
                    if want != d {
                        return Err(cfg_err(
                            "dimension",
                            format!("dimension {want} conflicts with region dimension {d}"),
                        ));
                    }
                }
                if d > 20 {
                    return Err(cfg_err("dimension", "must be <= 20"));
                }
            }
            Statistic::CorollaryEventProb => {
                if !matches!(&region, Region::Hypercube { dim: 2, .. }) {
                    return Err(cfg_err("region", "corollary_event_prob needs the square"));
                }
                for &n in &self.n_grid {
                    let m = (n as f64).sqrt().round() as u64;
                    if m * m != n || m < 8 {
                        return Err(cfg_err(
                            "n_grid",
                            format!("n={n} must be a perfect square m^2 with m >= 8"),
                        ));
                    }
                }
            }
            Statistic::MinContainedRadius | Statistic::FirstOccupiedMean => {
                if !matches!(&region, Region::Disk { .. }) {
                    return Err(cfg_err("region", "this statistic samples the unit disk"));
                }
            }
            Statistic::ExposedTiles => {
                if !region.is_planar() {
                    return Err(cfg_err("region", "exposed_tiles needs a planar region"));
                }
                if matches!(&region, Region::Polygon(_)) {
                    return Err(cfg_err(
                        "region",
                        "exposed_tiles supports disk, square and triangle regions",
                    ));
                }
            }
            _ => {
                if !region.is_planar() {
                    return Err(cfg_err("region", "hull statistics need a planar region"));
                }
            }
        }
        Ok(ResolvedConfig { region, directions })
    }

    /// Non-fatal notes, e.g. direction densities outside the regime the
    /// directed-hull scaling laws assume.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.statistic.needs_directions() {
            if let Some(spec) = &self.directions {
                if let Ok(d) = parse_directions(spec) {
                    if d.alpha() > PI / 2.0 + 1e-12 {
                        out.push(format!(
                            "direction density alpha = {:.4} exceeds pi/2; directed-hull \
                             complexity bounds assume alpha <= pi/2",
                            d.alpha()
                        ));
                    }
                }
            }
        }
        out
    }
}

/// One measured value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Record {
    pub n: u64,
    pub trial: u64,
    pub value: f64,
}

/// Substream index for an (n, trial) cell; `salt` separates auxiliary
/// streams (e.g. membership probes) from the sample stream.
pub fn cell_stream_index(n: u64, trial: u64, salt: u64) -> u64 {
    let mut h = 0x243F_6A88_85A3_08D3u64; // pi digits, any fixed constant
    h = mix64(h ^ n);
    h = mix64(h ^ trial);
    h = mix64(h ^ salt);
    h
}

/// Run the configured statistic over the full (n, trial) grid. Output is
/// sorted by n then trial and is byte-identical for any parallelism.
pub fn run(config: &ExperimentConfig) -> Result<Vec<Record>, ConfigError> {
    let resolved = config.resolve()?;
    let cells: Vec<(u64, u64)> = config
        .n_grid
        .iter()
        .flat_map(|&n| (0..config.trials).map(move |t| (n, t)))
        .collect();
    let records: Vec<Record> = cells
        .par_iter()
        .map(|&(n, trial)| Record {
            n,
            trial,
            value: compute_statistic(
                config.statistic,
                &resolved.region,
                resolved.directions.as_ref(),
                n,
                trial,
                config.master_seed,
            ),
        })
        .collect();
    // Cells were generated in (n, trial) order and mapped index-wise.
    Ok(records)
}

fn compute_statistic(
    stat: Statistic,
    region: &Region,
    directions: Option<&DirectionSet>,
    n: u64,
    trial: u64,
    master_seed: u64,
) -> f64 {
    let mut rng = substream(master_seed, cell_stream_index(n, trial, 0));
    match stat {
        Statistic::HullVertices => {
            let pts = region.sample_planar(n as usize, &mut rng);
            convex_hull(&pts).unwrap().vertex_count() as f64
        }
        Statistic::HullAreaDeficit => {
            let pts = region.sample_planar(n as usize, &mut rng);
            let hull = convex_hull(&pts).unwrap();
            1.0 - polygon_area(&hull) / region.measure()
        }
        Statistic::DchBoundaryCount => {
            let pts = region.sample_planar(n as usize, &mut rng);
            directed::boundary_count(&pts, directions.unwrap()).unwrap() as f64
        }
        Statistic::DchAreaDeficit => {
            let pts = region.sample_planar(n as usize, &mut rng);
            let mut probe_rng = substream(master_seed, cell_stream_index(n, trial, 1));
            let est = directed::area_estimate(
                &pts,
                directions.unwrap(),
                &mut probe_rng,
                DCH_AREA_PROBES,
                region,
            )
            .unwrap();
            1.0 - est / region.measure()
        }
        Statistic::NscCount => {
            let pts = region.sample_spatial(n as usize, &mut rng);
            orthant::orthant_exposed(&pts).unwrap().1 as f64
        }
        Statistic::MaximaCount => {
            let pts = region.sample_spatial(n as usize, &mut rng);
            orthant::maxima(&pts).unwrap().len() as f64
        }
        Statistic::ExposedTiles => {
            let pts = region.sample_planar(n as usize, &mut rng);
            let hull = convex_hull(&pts).unwrap();
            let tiling = exposure_tiling(region, n);
            tilings::exposed_tiles_convex(&tiling, &hull) as f64
        }
        Statistic::FirstOccupiedMean => {
            let pts = region.sample_planar(n as usize, &mut rng);
            let t = disk_tiling(n);
            let first = t.first_occupied_all(&pts);
            first.iter().sum::<usize>() as f64 / first.len() as f64
        }
        Statistic::MinContainedRadius => {
            let pts = region.sample_planar(n as usize, &mut rng);
            directed::min_contained_radius(
                &pts,
                directions.unwrap(),
                MIN_RADIUS_TOL,
                MIN_RADIUS_PROBES,
            )
            .unwrap()
        }
        Statistic::CorollaryEventProb => {
            let m = (n as f64).sqrt().round() as usize;
            corollary_trial(m, &mut rng)
        }
    }
}

/// Sector-annulus tiling with m = cbrt(n) sectors and m^2 rings, so tiles
/// have area pi/n when n is a perfect cube.
fn disk_tiling(n: u64) -> tilings::SectorAnnulusTiling {
    let m = ((n as f64).cbrt().round() as usize).max(3);
    tilings::build_sector_annulus(m, m * m).unwrap()
}

/// Roughly n tiles of area measure/n for each supported region.
fn exposure_tiling(region: &Region, n: u64) -> tilings::Tiling2 {
    match region {
        Region::Disk { .. } => tilings::Tiling2::Sector(disk_tiling(n)),
        Region::Hypercube { .. } => {
            let k = ((n as f64).sqrt().round() as usize).max(1);
            tilings::Tiling2::Grid(tilings::build_grid(k, 2, 1.0).unwrap())
        }
        Region::Triangle { a, b, c } => {
            let k = ((n as f64).sqrt().round() as usize).max(1);
            tilings::Tiling2::TriangleFan(tilings::build_triangle_fan(*a, *b, *c, 0, k, k).unwrap())
        }
        Region::Polygon(_) => unreachable!("validated out"),
    }
}

/// Aggregate statistics for one grid entry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AggregateRow {
    pub n: u64,
    pub trials: u64,
    pub mean: f64,
    pub stddev: f64,
    pub stderr: f64,
    pub min: f64,
    pub max: f64,
}

/// One row per n with exact mean, sample standard deviation (divisor
/// trials - 1; zero for a single trial) and standard error.
pub fn aggregate(records: &[Record]) -> Vec<AggregateRow> {
    let mut ns: Vec<u64> = records.iter().map(|r| r.n).collect();
    ns.sort_unstable();
    ns.dedup();
    ns.iter()
        .map(|&n| {
            let values: Vec<f64> = records
                .iter()
                .filter(|r| r.n == n)
                .map(|r| r.value)
                .collect();
            let trials = values.len() as u64;
            let mean = values.iter().sum::<f64>() / trials as f64;
            let var = if trials > 1 {
                values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (trials - 1) as f64
            } else {
                0.0
            };
            let stddev = var.sqrt();
            AggregateRow {
                n,
                trials,
                mean,
                stddev,
                stderr: stddev / (trials as f64).sqrt(),
                min: values.iter().copied().fold(f64::INFINITY, f64::min),
                max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            }
        })
        .collect()
}

/// Result of the Efron inequality check: the expected vertex count at n must
/// not exceed n times the expected area-deficit fraction at n/2, up to three
/// combined standard errors.
#[derive(Debug, Clone, Copy)]
pub struct EfronReport {
    pub lhs: f64,
    pub rhs: f64,
    pub lhs_stderr: f64,
    pub rhs_stderr: f64,
    pub pass: bool,
}

pub fn efron_check(
    region: &Region,
    n: u64,
    trials: u64,
    seed: u64,
) -> Result<EfronReport, ConfigError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(cfg_err("n", "efron check needs even n >= 4"));
    }
    if !region.is_planar() {
        return Err(cfg_err("region", "efron check needs a planar region"));
    }
    let measure = region.measure();
    let stats = |values: Vec<f64>| {
        let k = values.len() as f64;
        let mean = values.iter().sum::<f64>() / k;
        let var = if values.len() > 1 {
            values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0)
        } else {
            0.0
        };
        (mean, (var / k).sqrt())
    };
    let vertices: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = substream(seed, cell_stream_index(n, t, 0));
            let pts = region.sample_planar(n as usize, &mut rng);
            convex_hull(&pts).unwrap().vertex_count() as f64
        })
        .collect();
    let deficits: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = substream(seed, cell_stream_index(n / 2, t, 0));
            let pts = region.sample_planar((n / 2) as usize, &mut rng);
            1.0 - polygon_area(&convex_hull(&pts).unwrap()) / measure
        })
        .collect();
    let (lhs, lhs_stderr) = stats(vertices);
    let (f_half, f_stderr) = stats(deficits);
    let rhs = n as f64 * f_half;
    let rhs_stderr = n as f64 * f_stderr;
    let slack = 3.0 * (lhs_stderr * lhs_stderr + rhs_stderr * rhs_stderr).sqrt();
    Ok(EfronReport {
        lhs,
        rhs,
        lhs_stderr,
        rhs_stderr,
        pass: lhs <= rhs + slack,
    })
}

/// One trial of the adjacent-cell event: sample m^2 uniform unit-square
/// points and report the fraction of interior top-row cells that are
/// occupied while both horizontal neighbors are empty.
fn corollary_trial(m: usize, rng: &mut RngStream) -> f64 {
    assert!(m >= 8);
    let n = m * m;
    let mut occupied = vec![false; m];
    let top = (m - 1) as f64 / m as f64;
    for _ in 0..n {
        let x = rng.next_f64();
        let y = rng.next_f64();
        if y >= top {
            let col = ((x * m as f64) as usize).min(m - 1);
            occupied[col] = true;
        }
    }
    let hits = (1..m - 1)
        .filter(|&j| occupied[j] && !occupied[j - 1] && !occupied[j + 1])
        .count();
    hits as f64 / (m - 2) as f64
}

/// Per-trial event fractions; their mean estimates the limit probability
/// e^-2 - e^-3 of the adjacent-cell event.
pub fn corollary_event_trials(m: usize, trials: u64, seed: u64) -> Vec<f64> {
    assert!(m >= 8, "corollary event needs m >= 8");
    let n = (m * m) as u64;
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = substream(seed, cell_stream_index(n, t, 0));
            corollary_trial(m, &mut rng)
        })
        .collect()
}

pub fn corollary_event_probability(m: usize, trials: u64, seed: u64) -> f64 {
    let values = corollary_event_trials(m, trials, seed);
    values.iter().sum::<f64>() / values.len() as f64
}

/// Exact finite-n event probability: (1 - 2/n)^n - (1 - 3/n)^n.
pub fn corollary_exact_probability(m: usize) -> f64 {
    let n = (m * m) as f64;
    (1.0 - 2.0 / n).powf(n) - (1.0 - 3.0 / n).powf(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> ExperimentConfig {
        ExperimentConfig {
            statistic: Statistic::HullVertices,
            region: "disk".into(),
            directions: None,
            dimension: None,
            n_grid: vec![4],
            trials: 1,
            master_seed: 7,
            parallelism: None,
        }
    }

    #[test]
    fn hull_vertices_tiny_run() {
        let records = run(&base_config()).unwrap();
        assert_eq!(records.len(), 1);
        assert!((3.0..=4.0).contains(&records[0].value));
    }

    #[test]
    fn run_is_deterministic() {
        let mut cfg = base_config();
        cfg.n_grid = vec![16, 64];
        cfg.trials = 5;
        let a = run(&cfg).unwrap();
        let b = run(&cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn adding_grid_entries_preserves_existing_cells() {
        let mut small = base_config();
        small.n_grid = vec![32];
        small.trials = 4;
        let mut big = small.clone();
        big.n_grid = vec![16, 32, 64];
        let small_records = run(&small).unwrap();
        let big_records = run(&big).unwrap();
        for r in &small_records {
            assert!(big_records.contains(r));
        }
    }

    #[test]
    fn area_deficit_of_two_points_is_one() {
        let mut cfg = base_config();
        cfg.statistic = Statistic::HullAreaDeficit;
        cfg.n_grid = vec![2];
        let records = run(&cfg).unwrap();
        assert_eq!(records[0].value, 1.0);
    }

    #[test]
    fn validation_errors_name_fields() {
        let mut cfg = base_config();
        cfg.statistic = Statistic::DchBoundaryCount;
        let err = run(&cfg).unwrap_err();
        assert_eq!(err.field, "directions");

        let mut cfg = base_config();
        cfg.n_grid = vec![8, 8];
        assert_eq!(cfg.validate().unwrap_err().field, "n_grid");

        let mut cfg = base_config();
        cfg.trials = 0;
        assert_eq!(cfg.validate().unwrap_err().field, "trials");

        let mut cfg = base_config();
        cfg.statistic = Statistic::NscCount;
        cfg.region = "cube:3".into();
        cfg.dimension = Some(4);
        assert_eq!(cfg.validate().unwrap_err().field, "dimension");
    }

    #[test]
    fn aggregate_basics() {
        let records = vec![
            Record {
                n: 8,
                trial: 0,
                value: 1.0,
            },
            Record {
                n: 8,
                trial: 1,
                value: 2.0,
            },
            Record {
                n: 8,
                trial: 2,
                value: 3.0,
            },
            Record {
                n: 16,
                trial: 0,
                value: 5.0,
            },
        ];
        let rows = aggregate(&records);
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].mean, 2.0);
        assert_eq!(rows[0].stddev, 1.0);
        assert!((rows[0].stderr - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(rows[0].min, 1.0);
        assert_eq!(rows[0].max, 3.0);
        assert_eq!(rows[1].stddev, 0.0);
        assert_eq!(rows[1].trials, 1);
    }

    #[test]
    fn fair_coin_stderr() {
        // 10^4 coin flips: stderr of the mean is ~0.005.
        let mut rng = substream(5, 99);
        let records: Vec<Record> = (0..10_000)
            .map(|t| Record {
                n: 1,
                trial: t,
                value: if rng.next_f64() < 0.5 { 0.0 } else { 1.0 },
            })
            .collect();
        let rows = aggregate(&records);
        assert!(
            (rows[0].stderr - 0.005).abs() < 0.0005,
            "stderr {}",
            rows[0].stderr
        );
    }

    #[test]
    fn efron_degenerate_smallest_case() {
        let region = Region::disk(1.0).unwrap();
        let rep = efron_check(&region, 4, 200, 3).unwrap();
        assert!(rep.pass, "lhs {} rhs {}", rep.lhs, rep.rhs);
    }

    #[test]
    fn efron_holds_on_triangle_and_polygon_regions() {
        for spec in ["triangle", "kgon:5"] {
            let region = parse_region(spec).unwrap();
            let rep = efron_check(&region, 512, 300, 13).unwrap();
            assert!(rep.pass, "{spec}: lhs {} rhs {}", rep.lhs, rep.rhs);
        }
    }

    #[test]
    fn efron_rejects_odd_n() {
        let region = Region::disk(1.0).unwrap();
        assert!(efron_check(&region, 5, 10, 3).is_err());
    }

    #[test]
    fn corollary_small_m_matches_exact_formula() {
        let m = 8;
        let trials = 4000;
        let values = corollary_event_trials(m, trials, 11);
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let k = values.len() as f64;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0);
        let stderr = (var / k).sqrt();
        let exact = corollary_exact_probability(m);
        assert!(
            (mean - exact).abs() <= 3.0 * stderr + 1e-9,
            "mean {mean} exact {exact} stderr {stderr}"
        );
    }

    #[test]
    fn corollary_stderr_shrinks_with_trials() {
        let sd = |values: &[f64]| {
            let k = values.len() as f64;
            let mean = values.iter().sum::<f64>() / k;
            let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0);
            (var / k).sqrt()
        };
        let a = sd(&corollary_event_trials(10, 400, 21));
        let b = sd(&corollary_event_trials(10, 1600, 21));
        let ratio = a / b;
        assert!((1.5..=2.7).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn dch_area_deficit_monotone_in_directions() {
        // dxy is a subset of the 8 equally spaced directions; larger
        // direction sets give larger hulls, so smaller deficits, on the
        // same samples and probes.
        let mut small = base_config();
        small.statistic = Statistic::DchAreaDeficit;
        small.region = "square".into();
        small.directions = Some("dxy".into());
        small.n_grid = vec![64];
        small.trials = 8;
        let mut big = small.clone();
        big.directions = Some("equal:4".into());
        let d1 = run(&small).unwrap();
        let d2 = run(&big).unwrap();
        for (a, b) in d1.iter().zip(&d2) {
            assert!(a.value >= b.value - 1e-12, "{} vs {}", a.value, b.value);
        }
    }
}
