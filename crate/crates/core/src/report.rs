//! Tabular reports: the occupation/survival table, the model comparison and
//! the history tree dump. These back the `zeno-lab` binary but are plain
//! functions returning the rendered document, so they can be used (and
//! tested) without spawning a process.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_histories_capped, survival_closed_form, FlipKernel};
use crate::cook::{cook_closed_form, cook_ode_p2, DEFAULT_RATE_STEPS};
use crate::error::{Result, ZenoError};
use crate::measurement::occupation_closed_form;
use crate::monte_carlo::{estimate, DEFAULT_SEED};

/// Measurement counts of the published table.
pub const TABLE1_N_VALUES: [u32; 7] = [1, 2, 4, 8, 16, 32, 64];
pub const TABLE1_DECIMALS: u32 = 4;
pub const MAX_COMPARE_N: u32 = 4096;
pub const MAX_MC_TRIALS: u64 = 100_000_000;
pub const MAX_HISTORY_N: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = ZenoError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(ZenoError::InvalidArgument(format!(
                "unknown format {other:?}, expected csv or json"
            ))),
        }
    }
}

/// Rounds half away from zero at `decimals` places.
pub fn round_half_away(x: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (x * scale).round() / scale
}

/// Fixed-point rendering with the leading zero dropped, as in `.3750`.
pub fn format_probability(x: f64, decimals: u32) -> String {
    let text = format!("{:.*}", decimals as usize, round_half_away(x, decimals));
    match text.strip_prefix("0.") {
        Some(rest) => format!(".{rest}"),
        None => text,
    }
}

/// Occupation `P2(T)` and survival complement `𝒫2(T)` for a list of N.
#[derive(Debug, Clone, PartialEq)]
pub struct Table1 {
    pub n_values: Vec<u32>,
    pub p2_occupation: Vec<f64>,
    pub p2_survival_complement: Vec<f64>,
}

impl Table1 {
    pub fn compute(n_values: &[u32]) -> Result<Table1> {
        if n_values.is_empty() {
            return Err(ZenoError::InvalidArgument("no N values given".into()));
        }
        let mut p2_occupation = Vec::with_capacity(n_values.len());
        let mut p2_survival_complement = Vec::with_capacity(n_values.len());
        for &n in n_values {
            p2_occupation.push(occupation_closed_form(n)?.1);
            p2_survival_complement.push(survival_closed_form(n)?.1);
        }
        Ok(Table1 { n_values: n_values.to_vec(), p2_occupation, p2_survival_complement })
    }

    /// Three CSV lines laid out like the published table: N, occupation,
    /// survival complement.
    pub fn to_csv(&self, decimals: u32) -> String {
        let mut out = String::from("N");
        for n in &self.n_values {
            let _ = write!(out, ",{n}");
        }
        out.push('\n');
        for (label, row) in [
            ("p2_occupation", &self.p2_occupation),
            ("p2_survival_complement", &self.p2_survival_complement),
        ] {
            out.push_str(label);
            for &p in row {
                let _ = write!(out, ",{}", format_probability(p, decimals));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, decimals: u32) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            n: &'a [u32],
            decimals: u32,
            p2_occupation: Vec<f64>,
            p2_survival_complement: Vec<f64>,
        }
        let round = |v: &[f64]| v.iter().map(|&p| round_half_away(p, decimals)).collect();
        let doc = Doc {
            n: &self.n_values,
            decimals,
            p2_occupation: round(&self.p2_occupation),
            p2_survival_complement: round(&self.p2_survival_complement),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        out.push('\n');
        out
    }
}

pub fn cmd_table1(n_values: &[u32], decimals: u32, format: OutputFormat) -> Result<String> {
    if decimals > 15 {
        return Err(ZenoError::InvalidArgument(format!("decimals must be <= 15, got {decimals}")));
    }
    let table = Table1::compute(n_values)?;
    Ok(match format {
        OutputFormat::Csv => table.to_csv(decimals),
        OutputFormat::Json => table.to_json(decimals),
    })
}

/// One row of the model comparison. Monte Carlo columns are empty unless a
/// trial count was requested; `mc_stderr` is the standard error of
/// `mc_occupation` and `mc_stderr_survival` that of `mc_survival`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub n_measurements: u32,
    pub p2_occupation: f64,
    pub p2_survival_complement: f64,
    pub p2_cook: f64,
    pub p2_cook_ode: f64,
    pub mc_occupation: Option<f64>,
    pub mc_survival: Option<f64>,
    pub mc_stderr: Option<f64>,
    pub mc_stderr_survival: Option<f64>,
}

pub fn comparison_rows(
    n_min: u32,
    n_max: u32,
    mc_trials: Option<u64>,
    seed: Option<u64>,
) -> Result<Vec<ComparisonRow>> {
    if n_min == 0 || n_min > n_max || n_max > MAX_COMPARE_N {
        return Err(ZenoError::InvalidArgument(format!(
            "need 1 <= n_min <= n_max <= {MAX_COMPARE_N}, got {n_min}..{n_max}"
        )));
    }
    if let Some(trials) = mc_trials {
        if trials == 0 {
            return Err(ZenoError::ZeroTrials);
        }
        if trials > MAX_MC_TRIALS {
            return Err(ZenoError::InvalidArgument(format!(
                "mc trials {trials} exceed the cap of {MAX_MC_TRIALS}"
            )));
        }
    }
    let seed = seed.unwrap_or(DEFAULT_SEED);
    (n_min..=n_max)
        .map(|n| {
            let mc = mc_trials.map(|m| estimate(n, m, seed)).transpose()?;
            Ok(ComparisonRow {
                n_measurements: n,
                p2_occupation: occupation_closed_form(n)?.1,
                p2_survival_complement: survival_closed_form(n)?.1,
                p2_cook: cook_closed_form(n)?,
                p2_cook_ode: cook_ode_p2(n, DEFAULT_RATE_STEPS)?,
                mc_occupation: mc.map(|e| e.occupation_p1),
                mc_survival: mc.map(|e| e.survival_p1),
                mc_stderr: mc.map(|e| e.stderr_occupation),
                mc_stderr_survival: mc.map(|e| e.stderr_survival),
            })
        })
        .collect()
}

pub fn cmd_compare(
    n_min: u32,
    n_max: u32,
    mc_trials: Option<u64>,
    seed: Option<u64>,
    format: OutputFormat,
) -> Result<String> {
    let rows = comparison_rows(n_min, n_max, mc_trials, seed)?;
    render(&rows, format)
}

/// One history of the measurement tree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistoryRow {
    /// Levels found at each measurement, joined by `-`.
    pub levels: String,
    pub flip_count: usize,
    pub final_level: u8,
    pub probability: f64,
}

pub fn history_rows(n_measurements: u32) -> Result<Vec<HistoryRow>> {
    let kernel = FlipKernel::new(n_measurements)?;
    let rows = enumerate_histories_capped(&kernel, MAX_HISTORY_N)?
        .into_iter()
        .map(|(history, probability)| HistoryRow {
            levels: history.to_string(),
            flip_count: history.flip_count(),
            final_level: history.final_level().label(),
            probability,
        })
        .collect();
    Ok(rows)
}

pub fn cmd_histories(n_measurements: u32, format: OutputFormat) -> Result<String> {
    render(&history_rows(n_measurements)?, format)
}

/// CSV (header line, `\n` endings) or a flat JSON array of row objects.
pub fn render<T: Serialize>(rows: &[T], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            for row in rows {
                writer.serialize(row).map_err(|e| ZenoError::Output(e.to_string()))?;
            }
            let bytes = writer.into_inner().map_err(|e| ZenoError::Output(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| ZenoError::Output(e.to_string()))
        }
        OutputFormat::Json => {
            let mut out =
                serde_json::to_string_pretty(rows).map_err(|e| ZenoError::Output(e.to_string()))?;
            out.push('\n');
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_half_away_from_zero() {
        assert_eq!(round_half_away(0.375, 2), 0.38);
        assert_eq!(round_half_away(0.125, 2), 0.13);
        assert_eq!(round_half_away(-0.125, 2), -0.13);
        assert_eq!(format_probability(0.375, 4), ".3750");
        assert_eq!(format_probability(0.071561515, 4), ".0716");
        assert_eq!(format_probability(1.0, 0), "1");
        assert_eq!(format_probability(0.5, 1), ".5");
    }

    #[test]
    fn table1_layout() {
        let csv = cmd_table1(&TABLE1_N_VALUES, 4, OutputFormat::Csv).unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "N,1,2,4,8,16,32,64");
        assert_eq!(lines[1], "p2_occupation,1.0000,.5000,.3750,.2346,.1334,.0716,.0371");
        // The published table prints .2668 for N = 8; the formula rounds to .2669.
        assert_eq!(lines[2], "p2_survival_complement,1.0000,.7500,.4692,.2669,.1431,.0742,.0378");
    }

    #[test]
    fn table1_single_entry_zero_decimals() {
        let csv = cmd_table1(&[1], 0, OutputFormat::Csv).unwrap();
        assert_eq!(csv, "N,1\np2_occupation,1\np2_survival_complement,1\n");
    }

    #[test]
    fn table1_errors() {
        assert!(cmd_table1(&[], 4, OutputFormat::Csv).is_err());
        assert_eq!(cmd_table1(&[2, 0], 4, OutputFormat::Csv), Err(ZenoError::ZeroMeasurements));
    }

    #[test]
    fn table1_json() {
        let json = cmd_table1(&[2, 4], 4, OutputFormat::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["p2_occupation"][1], 0.375);
        assert_eq!(value["p2_survival_complement"][0], 0.75);
    }

    #[test]
    fn compare_without_mc() {
        let csv = cmd_compare(2, 4, None, None, OutputFormat::Csv).unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "n_measurements,p2_occupation,p2_survival_complement,p2_cook,p2_cook_ode,\
             mc_occupation,mc_survival,mc_stderr,mc_stderr_survival"
        );
        assert_eq!(lines.len(), 4);
        assert!(lines[1].ends_with(",,,,"));
    }

    #[test]
    fn compare_cook_columns() {
        let rows = comparison_rows(16, 16, None, None).unwrap();
        assert!((rows[0].p2_cook - 0.13270).abs() < 5e-6);
        assert!((rows[0].p2_occupation - 0.1334).abs() < 5e-5);
    }

    #[test]
    fn compare_errors() {
        assert!(comparison_rows(0, 3, None, None).is_err());
        assert!(comparison_rows(5, 3, None, None).is_err());
        assert!(comparison_rows(1, 4097, None, None).is_err());
        assert!(comparison_rows(1, 2, Some(MAX_MC_TRIALS + 1), None).is_err());
        assert_eq!(comparison_rows(1, 2, Some(0), None), Err(ZenoError::ZeroTrials));
    }

    #[test]
    fn histories_examples() {
        let rows = history_rows(2).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| (r.probability - 0.25).abs() < 1e-15));

        let rows = history_rows(1).unwrap();
        assert_eq!(rows[0].levels, "1");
        assert!(rows[0].probability.abs() < 1e-15);
        assert_eq!(rows[1].levels, "2");
        assert!((rows[1].probability - 1.0).abs() < 1e-15);

        let rows = history_rows(3).unwrap();
        assert_eq!(rows[0].levels, "1-1-1");
        assert!((rows[0].probability - 0.421875).abs() < 1e-15);

        let total: f64 = history_rows(12).unwrap().iter().map(|r| r.probability).sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert_eq!(history_rows(13), Err(ZenoError::EnumerationCap { n: 13, cap: 12 }));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
