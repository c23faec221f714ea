//! Coordinate tables for the four bound plots, rendered as CSV.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::bounds::{
    asymptotic_ratio, lambda_lower, lambda_upper, mhr_lower_exponential, mhr_upper_asymptotic,
    mhr_upper_best, mhr_upper_small_n, prior_independent_bound,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// MHR upper bounds (asymptotic and small-n) for `n = 2..=105`.
    Fig1,
    /// Best MHR upper bound, exponential lower bound and prior-independent
    /// bound for `n = 2..=105`.
    Fig2,
    /// λ-regular upper and lower bounds for `n ∈ {5, 20, 100}`.
    Fig3,
    /// The `n → ∞` ratio for `λ ∈ [0, 1]`.
    Fig4,
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" => Ok(FigureId::Fig1),
            "fig2" => Ok(FigureId::Fig2),
            "fig3" => Ok(FigureId::Fig3),
            "fig4" => Ok(FigureId::Fig4),
            _ => Err(Error::invalid(format!(
                "unknown figure {s:?}; expected fig1..fig4"
            ))),
        }
    }
}

pub const MHR_N_RANGE: std::ops::RangeInclusive<u32> = 2..=105;
pub const FIG3_BIDDERS: [u32; 3] = [5, 20, 100];

/// `0.001, 0.01, 0.02, …, 1.0`.
pub fn fig3_lambda_grid() -> Vec<f64> {
    std::iter::once(0.001)
        .chain((1..=100).map(|i| i as f64 / 100.0))
        .collect()
}

/// `0, 0.01, …, 1.0`.
pub fn fig4_lambda_grid() -> Vec<f64> {
    (0..=100).map(|i| i as f64 / 100.0).collect()
}

/// Whether a column holds an integer bidder count or a real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Key {
    Bidders,
    Lambda,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureTable {
    pub columns: Vec<&'static str>,
    pub key: Key,
    /// Each row starts with the key value.
    pub rows: Vec<Vec<f64>>,
    /// For per-`n` tables, the bidder count appended to the file name.
    pub bidders: Option<u32>,
}

impl FigureTable {
    /// Header row plus one line per row; fixed six-decimal values and `\n`
    /// line endings.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            match self.key {
                Key::Bidders => write!(out, "{}", row[0] as u32),
                Key::Lambda => write!(out, "{:.6}", row[0]),
            }
            .expect("writing to a String cannot fail");
            for v in &row[1..] {
                write!(out, ",{v:.6}").expect("writing to a String cannot fail");
            }
            out.push('\n');
        }
        out
    }

    /// `out` itself, or `out` with `_n<bidders>` inserted before the
    /// extension for per-`n` tables.
    pub fn output_path(&self, out: &Path) -> PathBuf {
        let Some(n) = self.bidders else {
            return out.to_path_buf();
        };
        let stem = out
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let name = match out.extension() {
            Some(ext) => format!("{stem}_n{n}.{}", ext.to_string_lossy()),
            None => format!("{stem}_n{n}"),
        };
        out.with_file_name(name)
    }
}

fn mhr_table<F>(columns: Vec<&'static str>, row: F) -> Result<FigureTable>
where
    F: Fn(u32) -> Result<Vec<f64>> + Sync,
{
    let rows = MHR_N_RANGE
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| {
            let mut r = vec![n as f64];
            r.extend(row(n)?);
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FigureTable {
        columns,
        key: Key::Bidders,
        rows,
        bidders: None,
    })
}

fn fig3_table(n: u32) -> Result<FigureTable> {
    let rows = fig3_lambda_grid()
        .into_par_iter()
        .map(|l| {
            Ok(vec![
                l,
                lambda_upper(n, l)?.value,
                lambda_lower(n, l)?.value,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FigureTable {
        columns: vec!["lambda", "upper", "lower"],
        key: Key::Lambda,
        rows,
        bidders: Some(n),
    })
}

/// The coordinate tables behind a figure; `Fig3` yields one table per `n`.
pub fn figure_tables(id: FigureId) -> Result<Vec<FigureTable>> {
    match id {
        FigureId::Fig1 => Ok(vec![mhr_table(
            vec!["n", "upper_asymptotic", "upper_small_n"],
            |n| {
                Ok(vec![
                    mhr_upper_asymptotic(n)?.value,
                    mhr_upper_small_n(n)?.value,
                ])
            },
        )?]),
        FigureId::Fig2 => Ok(vec![mhr_table(
            vec!["n", "upper_best", "lower_exponential", "prior_independent"],
            |n| {
                Ok(vec![
                    mhr_upper_best(n)?.value,
                    mhr_lower_exponential(n)?.value,
                    prior_independent_bound(n)?.value,
                ])
            },
        )?]),
        FigureId::Fig3 => FIG3_BIDDERS.iter().map(|&n| fig3_table(n)).collect(),
        FigureId::Fig4 => {
            let rows = fig4_lambda_grid()
                .into_par_iter()
                .map(|l| {
                    // Limit as λ → 0.
                    let v = if l == 0.0 {
                        1.0
                    } else {
                        asymptotic_ratio(l)?.value
                    };
                    Ok(vec![l, v])
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(vec![FigureTable {
                columns: vec!["lambda", "asymptotic_ratio"],
                key: Key::Lambda,
                rows,
                bidders: None,
            }])
        }
    }
}
