//! Records and aggregates CSV files. Formats are pinned: fixed headers,
//! values at 17 significant digits, rows ordered by n then trial, so reruns
//! with the same config are byte-identical.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::experiments::{AggregateRow, ExperimentConfig, Record};

pub const RECORDS_HEADER: &str = "statistic,region,directions,d,n,trial,value,seed";
pub const AGGREGATES_HEADER: &str = "n,trials,mean,stddev,stderr,min,max";

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt_value(v: f64) -> String {
    format!("{v:.16e}")
}

/// Write to `<path>.tmp` in the same directory, then rename into place.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let tmp = path.with_extension(match path.extension() {
        Some(e) => format!("{}.tmp", e.to_string_lossy()),
        None => "tmp".to_string(),
    });
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// The dimension column: explicit config dimension, or the cube dimension
/// for statistics defined by one.
pub fn effective_dimension(config: &ExperimentConfig) -> Option<usize> {
    if let Some(d) = config.dimension {
        return Some(d);
    }
    if let Some(rest) = config.region.strip_prefix("cube:") {
        return rest.parse().ok();
    }
    None
}

pub fn records_csv(config: &ExperimentConfig, records: &[Record]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(RECORDS_HEADER);
    out.push('\n');
    let directions = config.directions.as_deref().unwrap_or("");
    let d = effective_dimension(config)
        .map(|d| d.to_string())
        .unwrap_or_default();
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            config.statistic.name(),
            config.region,
            directions,
            d,
            r.n,
            r.trial,
            fmt_value(r.value),
            config.master_seed,
        ));
    }
    out
}

pub fn aggregates_csv(rows: &[AggregateRow]) -> String {
    let mut out = String::new();
    out.push_str(AGGREGATES_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.n,
            row.trials,
            fmt_value(row.mean),
            fmt_value(row.stddev),
            fmt_value(row.stderr),
            fmt_value(row.min),
            fmt_value(row.max),
        ));
    }
    out
}

/// Metadata shared by all rows of a records file.
#[derive(Debug, Clone, Default)]
pub struct RecordsMeta {
    pub statistic: String,
    pub region: String,
    pub directions: String,
    pub seed: String,
}

/// Parse a records CSV produced by `records_csv`.
pub fn parse_records_csv(contents: &str) -> Result<(RecordsMeta, Vec<Record>), String> {
    let mut lines = contents.lines();
    let header = lines.next().ok_or("empty records file")?;
    if header != RECORDS_HEADER {
        return Err(format!("unexpected records header `{header}`"));
    }
    let mut meta = RecordsMeta::default();
    let mut records = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(format!("line {}: expected 8 fields", lineno + 2));
        }
        if records.is_empty() {
            meta = RecordsMeta {
                statistic: fields[0].to_string(),
                region: fields[1].to_string(),
                directions: fields[2].to_string(),
                seed: fields[7].to_string(),
            };
        }
        let n = fields[4]
            .parse()
            .map_err(|_| format!("line {}: bad n", lineno + 2))?;
        let trial = fields[5]
            .parse()
            .map_err(|_| format!("line {}: bad trial", lineno + 2))?;
        let value = fields[6]
            .parse()
            .map_err(|_| format!("line {}: bad value", lineno + 2))?;
        records.push(Record { n, trial, value });
    }
    if records.is_empty() {
        return Err("records file has no data rows".into());
    }
    Ok((meta, records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::Statistic;

    #[test]
    fn records_round_trip() {
        let config = ExperimentConfig {
            statistic: Statistic::HullVertices,
            region: "disk".into(),
            directions: None,
            dimension: None,
            n_grid: vec![4, 8],
            trials: 2,
            master_seed: 7,
            parallelism: None,
        };
        let records = vec![
            Record {
                n: 4,
                trial: 0,
                value: 3.0,
            },
            Record {
                n: 4,
                trial: 1,
                value: 4.0,
            },
            Record {
                n: 8,
                trial: 0,
                value: 5.5,
            },
        ];
        let csv = records_csv(&config, &records);
        let (meta, parsed) = parse_records_csv(&csv).unwrap();
        assert_eq!(meta.statistic, "hull_vertices");
        assert_eq!(meta.seed, "7");
        assert_eq!(parsed, records);
    }

    #[test]
    fn value_formatting_has_17_significant_digits() {
        let s = fmt_value(1.0 / 3.0);
        assert_eq!(s, "3.3333333333333331e-1");
        let v: f64 = s.parse().unwrap();
        assert_eq!(v, 1.0 / 3.0);
    }

    #[test]
    fn bad_header_rejected() {
        assert!(parse_records_csv("nope\n1,2,3").is_err());
    }
}
