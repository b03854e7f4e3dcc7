//! Test of the crowd mean against the unbiased-forecaster null.
//!
//! Under the null the crowd mean of `n` independent Gaussian estimates with
//! variance `delta` is Gaussian around the truth with variance `delta / n`,
//! so the two-tailed p-value of an observed deviation is
//! `1 - erf(|mean - truth| / sqrt(2 delta / n))`.

use serde::{Deserialize, Serialize};

use super::erf::erfc_value;
use crate::error::{Error, Result};
use crate::panel::Experiment;
use crate::stats::diversity_decomposition;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BiasTestResult {
    pub p: f64,
    /// `|mean - truth| / sqrt(2 delta / n)`
    pub z_arg: f64,
}

pub fn bias_p_value(mean: f64, truth: f64, delta: f64, n: usize) -> Result<BiasTestResult> {
    if !(mean.is_finite() && truth.is_finite() && delta.is_finite()) {
        return Err(Error::NonFinite("bias test input".into()));
    }
    if delta <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "degenerate null: delta must be positive, got {delta}"
        )));
    }
    if n < 2 {
        return Err(Error::TooFewEstimates { needed: 2, got: n });
    }
    let z_arg = (mean - truth).abs() / (2.0 * delta / n as f64).sqrt();
    // erfc keeps precision where 1 - erf would round to 0; the floor keeps p inside (0, 1].
    let p = erfc_value(z_arg).clamp(f64::MIN_POSITIVE, 1.0);
    Ok(BiasTestResult { p, z_arg })
}

/// Bias test on a panel's own crowd mean and diversity.
pub fn bias_test(experiment: &Experiment) -> Result<BiasTestResult> {
    let d = diversity_decomposition(experiment)?;
    bias_p_value(d.mean, experiment.truth, d.delta, experiment.n())
}
