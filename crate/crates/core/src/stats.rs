//! Per-panel crowd statistics.
//!
//! For estimates `g_1..g_N` of a truth `G` with crowd mean `<g>`:
//!
//! * collective error `gamma = G - <g>`
//! * mean quadratic individual error `eps = (1/N) sum (g_i - G)^2`
//! * diversity `delta = (1/N) sum (g_i - <g>)^2`
//!
//! related by the diversity prediction identity `gamma^2 = eps - delta`.
//! All moments use population (1/N) normalization.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::panel::{Dataset, Experiment};

/// Neumaier-compensated sum.
pub(crate) fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn mean_of(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyPanel);
    }
    let n = values.len() as f64;
    let m = compensated_sum(values.iter().copied()) / n;
    // One refinement pass removes the residual rounding of the division.
    // Each difference is split error-free so the residual itself is accurate.
    let r = compensated_sum(values.iter().flat_map(|&v| {
        let d = v - m;
        let vv = d + m;
        let err = (v - vv) + (-m - (d - vv));
        [d, err]
    })) / n;
    Ok(m + r)
}

/// Crowd estimate `<g>`, the arithmetic mean of the estimates.
pub fn crowd_mean(experiment: &Experiment) -> Result<f64> {
    mean_of(&experiment.values())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub mean: f64,
    /// Signed collective error `G - <g>`.
    pub gamma: f64,
    pub eps: f64,
    pub delta: f64,
}

impl Decomposition {
    /// `gamma^2 - (eps - delta)`; zero up to rounding.
    pub fn dpt_residual(&self) -> f64 {
        self.gamma * self.gamma - (self.eps - self.delta)
    }
}

fn decompose(values: &[f64], truth: f64) -> Result<Decomposition> {
    let mean = mean_of(values)?;
    let n = values.len() as f64;
    let eps = compensated_sum(values.iter().map(|g| (g - truth) * (g - truth))) / n;
    let delta = compensated_sum(values.iter().map(|g| (g - mean) * (g - mean))) / n;
    Ok(Decomposition {
        mean,
        gamma: truth - mean,
        eps,
        delta,
    })
}

/// Collective error, mean quadratic individual error and diversity.
pub fn diversity_decomposition(experiment: &Experiment) -> Result<Decomposition> {
    decompose(&experiment.values(), experiment.truth)
}

fn skew_of(values: &[f64], mean: f64, delta: f64) -> Result<f64> {
    if values.len() < 2 {
        return Err(Error::TooFewEstimates {
            needed: 2,
            got: values.len(),
        });
    }
    if delta <= 0.0 {
        return Err(Error::UndefinedSkew);
    }
    let sd = delta.sqrt();
    Ok(compensated_sum(values.iter().map(|g| ((g - mean) / sd).powi(3))) / values.len() as f64)
}

/// Third standardized moment of the estimates. Negative when the left tail is longer.
pub fn skewness(experiment: &Experiment) -> Result<f64> {
    let values = experiment.values();
    if values.len() < 2 {
        return Err(Error::TooFewEstimates {
            needed: 2,
            got: values.len(),
        });
    }
    let d = decompose(&values, experiment.truth)?;
    skew_of(&values, d.mean, d.delta)
}

fn count_beating(values: &[f64], truth: f64, mean: f64) -> usize {
    let crowd_error = (mean - truth).abs();
    values
        .iter()
        .filter(|g| (*g - truth).abs() < crowd_error)
        .count()
}

/// Fraction `xi` of individuals strictly closer to the truth than the crowd.
/// Ties go to the crowd.
pub fn fraction_beating_crowd(experiment: &Experiment) -> Result<f64> {
    let values = experiment.values();
    let mean = mean_of(&values)?;
    Ok(count_beating(&values, experiment.truth, mean) as f64 / values.len() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub n: usize,
    pub mean: f64,
    pub gamma: f64,
    pub eps: f64,
    pub delta: f64,
    /// `None` exactly when `delta == 0`.
    pub skew: Option<f64>,
    pub xi: f64,
    /// Number of individuals beating the crowd; `xi * n`.
    pub n_beating: usize,
    /// `gamma / G`
    pub scaled_error_signed: f64,
    /// `|gamma| / G`
    pub scaled_error_abs: f64,
    /// `sqrt(eps) / G`
    pub scaled_rmse: f64,
    /// `sqrt(delta) / <g>`
    pub scaled_diversity: f64,
    pub dpt_residual: f64,
}

/// All per-panel diagnostics at once.
pub fn summarize(experiment: &Experiment) -> Result<SummaryStats> {
    let values = experiment.values();
    let n = values.len();
    if n < 2 {
        return Err(Error::TooFewEstimates { needed: 2, got: n });
    }
    let truth = experiment.truth;
    let d = decompose(&values, truth)?;
    if truth == 0.0 {
        return Err(Error::ZeroDenominator("truth"));
    }
    if d.mean == 0.0 {
        return Err(Error::ZeroDenominator("mean"));
    }
    let skew = match skew_of(&values, d.mean, d.delta) {
        Ok(s) => Some(s),
        Err(Error::UndefinedSkew) => None,
        Err(e) => return Err(e),
    };
    let n_beating = count_beating(&values, truth, d.mean);
    Ok(SummaryStats {
        n,
        mean: d.mean,
        gamma: d.gamma,
        eps: d.eps,
        delta: d.delta,
        skew,
        xi: n_beating as f64 / n as f64,
        n_beating,
        scaled_error_signed: d.gamma / truth,
        scaled_error_abs: d.gamma.abs() / truth,
        scaled_rmse: d.eps.sqrt() / truth,
        scaled_diversity: d.delta.sqrt() / d.mean,
        dpt_residual: d.dpt_residual(),
    })
}

/// Summarizes every experiment in parallel; results follow dataset order.
pub fn summarize_dataset(dataset: &Dataset) -> Vec<(String, Result<SummaryStats>)> {
    dataset
        .experiments()
        .par_iter()
        .map(|e| (e.id.clone(), summarize(e)))
        .collect()
}
