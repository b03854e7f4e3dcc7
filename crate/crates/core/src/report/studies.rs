//! Dataset-level studies: summary tables, scatter correlations and the
//! histogram families for xi, bias p-values and relative estimates.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::histogram::{empirical_cdf, natural_fraction_edges, uniform_edges, HistogramTable};
use crate::error::{Error, Result};
use crate::format::fmt15;
use crate::inference::{
    bias_test, correlation_test, BiasTestResult, CorrelationOptions, CorrelationResult,
};
use crate::null::SkippedExperiment;
use crate::panel::{Dataset, Experiment};
use crate::stats::{crowd_mean, fraction_beating_crowd, summarize_dataset, SummaryStats};

pub const DEFAULT_BINS: usize = 20;

pub fn write_skipped_csv<W: Write>(mut w: W, skipped: &[SkippedExperiment]) -> Result<()> {
    writeln!(w, "id,reason")?;
    for s in skipped {
        writeln!(w, "{},\"{}\"", s.id, s.reason.replace('"', "'"))?;
    }
    Ok(())
}

fn opt15(v: Option<f64>) -> String {
    v.map(fmt15).unwrap_or_else(|| "undef".into())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryReport {
    pub rows: Vec<(String, SummaryStats)>,
    pub skipped: Vec<SkippedExperiment>,
}

pub fn summary_report(dataset: &Dataset) -> Result<SummaryReport> {
    if dataset.is_empty() {
        return Err(Error::EmptyPanel);
    }
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (id, outcome) in summarize_dataset(dataset) {
        match outcome {
            Ok(s) => rows.push((id, s)),
            Err(e) => skipped.push(SkippedExperiment {
                id,
                reason: e.to_string(),
            }),
        }
    }
    Ok(SummaryReport { rows, skipped })
}

impl SummaryReport {
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(
            w,
            "id,n,mean,gamma,eps,delta,skew,xi,scaled_error,scaled_error_abs,scaled_rmse,scaled_diversity,dpt_residual"
        )?;
        for (id, s) in &self.rows {
            writeln!(
                w,
                "{id},{},{},{},{},{},{},{},{},{},{},{},{}",
                s.n,
                fmt15(s.mean),
                fmt15(s.gamma),
                fmt15(s.eps),
                fmt15(s.delta),
                opt15(s.skew),
                fmt15(s.xi),
                fmt15(s.scaled_error_signed),
                fmt15(s.scaled_error_abs),
                fmt15(s.scaled_rmse),
                fmt15(s.scaled_diversity),
                fmt15(s.dpt_residual)
            )?;
        }
        Ok(())
    }
}

/// A [`SummaryStats`] field usable as a scatter axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    Mean,
    Gamma,
    Eps,
    Delta,
    Skew,
    Xi,
    ScaledError,
    ScaledErrorAbs,
    ScaledRmse,
    ScaledDiversity,
}

impl Statistic {
    pub const ALL: [Statistic; 10] = [
        Statistic::Mean,
        Statistic::Gamma,
        Statistic::Eps,
        Statistic::Delta,
        Statistic::Skew,
        Statistic::Xi,
        Statistic::ScaledError,
        Statistic::ScaledErrorAbs,
        Statistic::ScaledRmse,
        Statistic::ScaledDiversity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Mean => "mean",
            Statistic::Gamma => "gamma",
            Statistic::Eps => "eps",
            Statistic::Delta => "delta",
            Statistic::Skew => "skew",
            Statistic::Xi => "xi",
            Statistic::ScaledError => "scaled_error",
            Statistic::ScaledErrorAbs => "scaled_error_abs",
            Statistic::ScaledRmse => "scaled_rmse",
            Statistic::ScaledDiversity => "scaled_diversity",
        }
    }

    /// `None` when the field is undefined for this panel (skew at zero diversity).
    pub fn value(self, s: &SummaryStats) -> Option<f64> {
        match self {
            Statistic::Mean => Some(s.mean),
            Statistic::Gamma => Some(s.gamma),
            Statistic::Eps => Some(s.eps),
            Statistic::Delta => Some(s.delta),
            Statistic::Skew => s.skew,
            Statistic::Xi => Some(s.xi),
            Statistic::ScaledError => Some(s.scaled_error_signed),
            Statistic::ScaledErrorAbs => Some(s.scaled_error_abs),
            Statistic::ScaledRmse => Some(s.scaled_rmse),
            Statistic::ScaledDiversity => Some(s.scaled_diversity),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|stat| stat.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScatterReport {
    pub x: Statistic,
    pub y: Statistic,
    pub pairs: Vec<(String, f64, f64)>,
    pub dropped: Vec<SkippedExperiment>,
    pub x_mean: f64,
    pub x_sd: f64,
    pub y_mean: f64,
    pub y_sd: f64,
    pub correlation: CorrelationResult,
}

/// Mean and population standard deviation.
pub fn mean_sd(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Per-experiment `(x, y)` pairs with their means, spreads and rank correlation.
pub fn scatter(
    dataset: &Dataset,
    x: Statistic,
    y: Statistic,
    opts: &CorrelationOptions,
) -> Result<ScatterReport> {
    let mut pairs = Vec::new();
    let mut dropped = Vec::new();
    for (id, outcome) in summarize_dataset(dataset) {
        let s = match outcome {
            Ok(s) => s,
            Err(e) => {
                dropped.push(SkippedExperiment {
                    id,
                    reason: e.to_string(),
                });
                continue;
            }
        };
        match (x.value(&s), y.value(&s)) {
            (Some(a), Some(b)) => pairs.push((id, a, b)),
            _ => dropped.push(SkippedExperiment {
                id,
                reason: "undefined skew".into(),
            }),
        }
    }
    if pairs.len() < 3 {
        return Err(Error::UndefinedCorrelation(format!(
            "need at least 3 usable experiments, got {}",
            pairs.len()
        )));
    }
    let xs: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let ys: Vec<f64> = pairs.iter().map(|p| p.2).collect();
    let correlation = correlation_test(&xs, &ys, opts)?;
    let (x_mean, x_sd) = mean_sd(&xs);
    let (y_mean, y_sd) = mean_sd(&ys);
    Ok(ScatterReport {
        x,
        y,
        pairs,
        dropped,
        x_mean,
        x_sd,
        y_mean,
        y_sd,
        correlation,
    })
}

impl ScatterReport {
    pub fn write_pairs_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "id,{},{}", self.x, self.y)?;
        for (id, a, b) in &self.pairs {
            writeln!(w, "{id},{},{}", fmt15(*a), fmt15(*b))?;
        }
        Ok(())
    }

    pub fn write_summary_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let c = &self.correlation;
        writeln!(
            w,
            "x,y,n_pairs,n_dropped,x_mean,x_sd,y_mean,y_sd,coefficient,rho,p_value,p_method,n_perm"
        )?;
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.x,
            self.y,
            c.n_pairs,
            self.dropped.len(),
            fmt15(self.x_mean),
            fmt15(self.x_sd),
            fmt15(self.y_mean),
            fmt15(self.y_sd),
            match c.kind {
                crate::inference::CorrelationKind::Spearman => "spearman",
                crate::inference::CorrelationKind::Pearson => "pearson",
            },
            fmt15(c.rho),
            fmt15(c.p_value),
            match c.method {
                crate::inference::PValueMethod::Permutation => "permutation",
                crate::inference::PValueMethod::ExactEnumeration => "exact-enumeration",
            },
            c.n_perm
        )?;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct XiReport {
    pub values: Vec<(String, usize, f64)>,
    pub histogram: HistogramTable,
}

pub const MARKER_CDF_HALF: &str = "cdf_at_0.5";
pub const MARKER_XI_ZERO: &str = "proportion_xi_zero";
pub const MARKER_CDF_005: &str = "cdf_at_0.05";

/// Distribution of the beat-the-crowd fraction across experiments.
///
/// With `bins == None`, a dataset whose panels all share one N gets one bin
/// per attainable fraction `k/N`; otherwise 20 uniform bins on `[0, 1]`.
pub fn xi_histogram(dataset: &Dataset, bins: Option<usize>) -> Result<XiReport> {
    if dataset.is_empty() {
        return Err(Error::EmptyPanel);
    }
    let values: Vec<(String, usize, f64)> = dataset
        .experiments()
        .par_iter()
        .map(|e| Ok((e.id.clone(), e.n(), fraction_beating_crowd(e)?)))
        .collect::<Result<_>>()?;
    let xis: Vec<f64> = values.iter().map(|v| v.2).collect();
    let first_n = values[0].1;
    let edges = match bins {
        Some(b) => uniform_edges(0.0, 1.0, b)?,
        None if values.iter().all(|v| v.1 == first_n) => natural_fraction_edges(first_n)?,
        None => uniform_edges(0.0, 1.0, DEFAULT_BINS)?,
    };
    let zero = xis.iter().filter(|&&x| x == 0.0).count() as f64 / xis.len() as f64;
    let histogram = HistogramTable::from_edges(&xis, edges)?
        .with_marker(MARKER_CDF_HALF, empirical_cdf(&xis, 0.5))
        .with_marker(MARKER_XI_ZERO, zero);
    Ok(XiReport { values, histogram })
}

impl XiReport {
    pub fn write_values_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "id,n,xi")?;
        for (id, n, xi) in &self.values {
            writeln!(w, "{id},{n},{}", fmt15(*xi))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BiasRow {
    pub id: String,
    pub n: usize,
    pub mean: f64,
    pub truth: f64,
    pub result: BiasTestResult,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BiasReport {
    pub rows: Vec<BiasRow>,
    pub skipped: Vec<SkippedExperiment>,
    pub histogram: HistogramTable,
}

/// Bias-test p-values of every experiment with positive diversity, binned
/// uniformly on `[0, 1]`.
pub fn bias_histogram(dataset: &Dataset, bins: Option<usize>) -> Result<BiasReport> {
    let outcomes: Vec<(String, Result<BiasRow>)> = dataset
        .experiments()
        .par_iter()
        .map(|e| {
            let row = bias_test(e).and_then(|result| {
                Ok(BiasRow {
                    id: e.id.clone(),
                    n: e.n(),
                    mean: crowd_mean(e)?,
                    truth: e.truth,
                    result,
                })
            });
            (e.id.clone(), row)
        })
        .collect();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (id, outcome) in outcomes {
        match outcome {
            Ok(r) => rows.push(r),
            Err(e) => skipped.push(SkippedExperiment {
                id,
                reason: e.to_string(),
            }),
        }
    }
    if rows.is_empty() {
        return Err(Error::InvalidParameter(
            "no experiment has positive diversity".into(),
        ));
    }
    let ps: Vec<f64> = rows.iter().map(|r| r.result.p).collect();
    let histogram = HistogramTable::uniform(&ps, 0.0, 1.0, bins.unwrap_or(DEFAULT_BINS))?
        .with_marker(MARKER_CDF_005, empirical_cdf(&ps, 0.05));
    Ok(BiasReport {
        rows,
        skipped,
        histogram,
    })
}

impl BiasReport {
    pub fn write_values_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "id,n,mean,truth,z_arg,p")?;
        for r in &self.rows {
            writeln!(
                w,
                "{},{},{},{},{},{}",
                r.id,
                r.n,
                fmt15(r.mean),
                fmt15(r.truth),
                fmt15(r.result.z_arg),
                fmt15(r.result.p)
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EstimatesReport {
    pub id: String,
    pub relative: Vec<f64>,
    /// `G / <g>`
    pub truth_ratio: f64,
    /// Open interval of relative estimates that beat the crowd; `None` when
    /// the crowd is exact and nobody can beat it.
    pub beats_crowd_band: Option<(f64, f64)>,
    pub histogram: HistogramTable,
}

pub const MARKER_CROWD: &str = "crowd";
pub const MARKER_TRUTH_RATIO: &str = "truth_ratio";

/// Histogram of `g_i / <g>` for one experiment.
pub fn estimates_histogram(
    dataset: &Dataset,
    id: &str,
    bins: Option<usize>,
) -> Result<EstimatesReport> {
    let e = dataset
        .get(id)
        .ok_or_else(|| Error::UnknownExperiment(id.to_string()))?;
    relative_estimates(e, bins.unwrap_or(DEFAULT_BINS))
}

fn relative_estimates(e: &Experiment, bins: usize) -> Result<EstimatesReport> {
    let mean = crowd_mean(e)?;
    if mean == 0.0 {
        return Err(Error::ZeroDenominator("mean"));
    }
    let relative: Vec<f64> = e.values().iter().map(|g| g / mean).collect();
    let lo = relative.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = relative.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if lo < hi {
        (lo, hi)
    } else {
        (lo - 0.5, hi + 0.5)
    };
    let truth_ratio = e.truth / mean;
    let crowd_error = (mean - e.truth).abs();
    let beats_crowd_band = (crowd_error > 0.0).then(|| {
        let a = (e.truth - crowd_error) / mean;
        let b = (e.truth + crowd_error) / mean;
        (a.min(b), a.max(b))
    });
    let mut histogram = HistogramTable::uniform(&relative, lo, hi, bins)?
        .with_marker(MARKER_CROWD, 1.0)
        .with_marker(MARKER_TRUTH_RATIO, truth_ratio);
    if let Some((a, b)) = beats_crowd_band {
        histogram = histogram
            .with_marker("beats_crowd_lo", a)
            .with_marker("beats_crowd_hi", b);
    }
    Ok(EstimatesReport {
        id: e.id.clone(),
        relative,
        truth_ratio,
        beats_crowd_band,
        histogram,
    })
}
