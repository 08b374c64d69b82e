//! Growth-law fitting on aggregate means: power (y = a n^b), logarithmic
//! (y = a + b ln n) and polylog (y = a (ln n)^b) models via least squares on
//! the transformed coordinates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::AggregateRow;

#[derive(Debug, Error, PartialEq)]
pub enum FitError {
    #[error("fit needs at least 3 aggregate rows")]
    TooFewRows,
    #[error("nonpositive mean under a log transform")]
    NonPositiveMean,
    #[error("n must be >= 2 for this model")]
    InvalidN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitModel {
    /// y = a * n^b
    Power,
    /// y = a + b * ln n
    Log,
    /// y = a * (ln n)^b
    Polylog,
}

impl std::str::FromStr for FitModel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "power" => Ok(FitModel::Power),
            "log" => Ok(FitModel::Log),
            "polylog" => Ok(FitModel::Polylog),
            other => Err(format!("unknown fit model `{other}`")),
        }
    }
}

impl std::fmt::Display for FitModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FitModel::Power => "power",
            FitModel::Log => "log",
            FitModel::Polylog => "polylog",
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FitResult {
    pub model: FitModel,
    pub a: f64,
    pub b: f64,
    pub stderr_b: f64,
    pub r_squared: f64,
}

/// Ordinary least squares for y = intercept + slope * x.
#[derive(Debug, Clone, Copy)]
pub struct LinearFit {
    pub intercept: f64,
    pub slope: f64,
    pub stderr_slope: f64,
    pub r_squared: f64,
}

pub fn linear_fit(xs: &[f64], ys: &[f64]) -> LinearFit {
    assert_eq!(xs.len(), ys.len());
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - (intercept + slope * x)).powi(2))
        .sum();
    let sst: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let r_squared = if sst == 0.0 { 1.0 } else { 1.0 - sse / sst };
    let dof = xs.len().saturating_sub(2);
    let stderr_slope = if dof > 0 && sxx > 0.0 {
        (sse / dof as f64 / sxx).sqrt()
    } else {
        0.0
    };
    LinearFit {
        intercept,
        slope,
        stderr_slope,
        r_squared,
    }
}

/// Least squares on the model's transformed coordinates, unweighted,
/// computed on aggregate means only.
pub fn fit(rows: &[AggregateRow], model: FitModel) -> Result<FitResult, FitError> {
    if rows.len() < 3 {
        return Err(FitError::TooFewRows);
    }
    let mut xs = Vec::with_capacity(rows.len());
    let mut ys = Vec::with_capacity(rows.len());
    for row in rows {
        let (x, y) = match model {
            FitModel::Power => {
                if row.mean <= 0.0 {
                    return Err(FitError::NonPositiveMean);
                }
                ((row.n as f64).ln(), row.mean.ln())
            }
            FitModel::Log => ((row.n as f64).ln(), row.mean),
            FitModel::Polylog => {
                if row.n < 2 {
                    return Err(FitError::InvalidN);
                }
                if row.mean <= 0.0 {
                    return Err(FitError::NonPositiveMean);
                }
                ((row.n as f64).ln().ln(), row.mean.ln())
            }
        };
        xs.push(x);
        ys.push(y);
    }
    let lf = linear_fit(&xs, &ys);
    let a = match model {
        FitModel::Log => lf.intercept,
        FitModel::Power | FitModel::Polylog => lf.intercept.exp(),
    };
    Ok(FitResult {
        model,
        a,
        b: lf.slope,
        stderr_b: lf.stderr_slope,
        r_squared: lf.r_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows_of(pairs: &[(u64, f64)]) -> Vec<AggregateRow> {
        pairs
            .iter()
            .map(|&(n, mean)| AggregateRow {
                n,
                trials: 1,
                mean,
                stddev: 0.0,
                stderr: 0.0,
                min: mean,
                max: mean,
            })
            .collect()
    }

    #[test]
    fn exact_power_law_recovered() {
        let rows = rows_of(&[
            (10, 10f64.powf(1.0 / 3.0)),
            (100, 100f64.powf(1.0 / 3.0)),
            (1000, 1000f64.powf(1.0 / 3.0)),
        ]);
        let f = fit(&rows, FitModel::Power).unwrap();
        assert!((f.b - 1.0 / 3.0).abs() < 1e-9);
        assert!((f.a - 1.0).abs() < 1e-9);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
        assert!(f.stderr_b < 1e-9);
    }

    #[test]
    fn exact_log_law_recovered() {
        let rows = rows_of(&[
            (10, 2.0 + 3.0 * 10f64.ln()),
            (100, 2.0 + 3.0 * 100f64.ln()),
            (1000, 2.0 + 3.0 * 1000f64.ln()),
            (10000, 2.0 + 3.0 * 10000f64.ln()),
        ]);
        let f = fit(&rows, FitModel::Log).unwrap();
        assert!((f.a - 2.0).abs() < 1e-9);
        assert!((f.b - 3.0).abs() < 1e-9);
    }

    #[test]
    fn exact_polylog_recovered() {
        let rows = rows_of(&[
            (16, 16f64.ln().powf(2.0)),
            (256, 256f64.ln().powf(2.0)),
            (4096, 4096f64.ln().powf(2.0)),
        ]);
        let f = fit(&rows, FitModel::Polylog).unwrap();
        assert!((f.b - 2.0).abs() < 1e-9);
        assert!((f.a - 1.0).abs() < 1e-9);
    }

    #[test]
    fn nonpositive_mean_rejected() {
        let rows = rows_of(&[(10, 1.0), (100, 0.0), (1000, 2.0)]);
        assert!(matches!(
            fit(&rows, FitModel::Power),
            Err(FitError::NonPositiveMean)
        ));
    }

    #[test]
    fn too_few_rows_rejected() {
        let rows = rows_of(&[(10, 1.0), (100, 2.0)]);
        assert!(matches!(
            fit(&rows, FitModel::Power),
            Err(FitError::TooFewRows)
        ));
    }
}
