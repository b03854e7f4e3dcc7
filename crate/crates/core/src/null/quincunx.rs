//! Augmented quincunx forecasters.
//!
//! The truth is a prototype value plus the contributions of `C` cues,
//! `G = G_hat + sum_c eta_c`. Each individual perceives every cue
//! independently: with probability `p` its sign is read correctly
//! (`u_c = +1`), otherwise it is flipped (`u_c = -1`), giving the estimate
//! `g = G_hat + sum_c u_c eta_c`. Cue draws are i.i.d. across cues and
//! across individuals.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::seed::{derive_seed, seeded_rng, SimRng};
use super::unbiased::synthetic_period;
use crate::error::{Error, Result};
use crate::panel::{group_id, Dataset, Experiment};
use crate::stats::compensated_sum;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuincunxParams {
    pub g_hat: f64,
    pub cues: Vec<f64>,
    /// Probability that a cue is categorized correctly.
    pub p_cue: f64,
    pub seed: u64,
}

impl QuincunxParams {
    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p_cue) {
            return Err(Error::InvalidParameter(format!(
                "p_cue must lie in [0, 1], got {}",
                self.p_cue
            )));
        }
        if !self.g_hat.is_finite() || self.cues.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("quincunx parameters".into()));
        }
        Ok(())
    }
}

pub fn quincunx_truth(params: &QuincunxParams) -> f64 {
    compensated_sum(std::iter::once(params.g_hat).chain(params.cues.iter().copied()))
}

fn estimate(g_hat: f64, cues: &[f64], p_cue: f64, rng: &mut SimRng) -> f64 {
    let terms = cues.iter().map(|&eta| {
        // random::<f64>() lies in [0, 1): p = 1 always reads correctly, p = 0 never does.
        if rng.random::<f64>() < p_cue {
            eta
        } else {
            -eta
        }
    });
    compensated_sum(std::iter::once(g_hat).chain(terms))
}

fn panel_values(params: &QuincunxParams, n: usize, rng: &mut SimRng) -> Vec<f64> {
    (0..n)
        .map(|_| estimate(params.g_hat, &params.cues, params.p_cue, rng))
        .collect()
}

pub fn sample_quincunx_panel(params: &QuincunxParams, n: usize) -> Result<Experiment> {
    params.validate()?;
    if n == 0 {
        return Err(Error::EmptyPanel);
    }
    let values = panel_values(params, n, &mut seeded_rng(params.seed));
    Experiment::from_values(
        "quincunx",
        "quincunx",
        0,
        None,
        quincunx_truth(params),
        &values,
    )
}

/// Ensemble of quincunx experiments; cue weights are redrawn uniformly from
/// `[cue_low, cue_high]` for every experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuincunxEnsemble {
    pub g_hat: f64,
    pub n_cues: usize,
    pub cue_low: f64,
    pub cue_high: f64,
    pub p_cue: f64,
    pub n_experiments: usize,
    pub n_per: usize,
    /// Shift each experiment's cues to sum to zero, so that `G == G_hat`.
    pub centered_cues: bool,
    pub seed: u64,
}

impl Default for QuincunxEnsemble {
    fn default() -> Self {
        Self {
            g_hat: 1000.0,
            n_cues: 10,
            cue_low: -50.0,
            cue_high: 50.0,
            p_cue: 0.7,
            n_experiments: 500,
            n_per: 40,
            centered_cues: false,
            seed: 0,
        }
    }
}

impl QuincunxEnsemble {
    /// The `p = 1/2`, `G_hat = G` limit in which the model is unbiased.
    pub fn unbiased_limit() -> Self {
        Self {
            p_cue: 0.5,
            centered_cues: true,
            ..Self::default()
        }
    }
}

pub fn quincunx_ensemble(cfg: &QuincunxEnsemble) -> Result<Dataset> {
    if cfg.n_experiments < 2 {
        return Err(Error::InvalidParameter(format!(
            "n_experiments must be at least 2, got {}",
            cfg.n_experiments
        )));
    }
    if !(cfg.cue_low.is_finite() && cfg.cue_high.is_finite()) || cfg.cue_low > cfg.cue_high {
        return Err(Error::InvalidParameter(format!(
            "empty cue range [{}, {}]",
            cfg.cue_low, cfg.cue_high
        )));
    }
    if cfg.n_per == 0 {
        return Err(Error::EmptyPanel);
    }
    let period = synthetic_period();
    let experiments = (0..cfg.n_experiments)
        .into_par_iter()
        .map(|i| {
            let indicator = format!("quincunx{i:05}");
            let id = group_id(&indicator, 0, period);
            let mut rng = seeded_rng(derive_seed(cfg.seed, &id, 0));
            let mut cues: Vec<f64> = (0..cfg.n_cues)
                .map(|_| {
                    if cfg.cue_low == cfg.cue_high {
                        cfg.cue_low
                    } else {
                        rng.random_range(cfg.cue_low..cfg.cue_high)
                    }
                })
                .collect();
            if cfg.centered_cues && !cues.is_empty() {
                let mean = compensated_sum(cues.iter().copied()) / cues.len() as f64;
                cues.iter_mut().for_each(|c| *c -= mean);
            }
            let params = QuincunxParams {
                g_hat: cfg.g_hat,
                cues,
                p_cue: cfg.p_cue,
                seed: 0,
            };
            params.validate()?;
            let values = panel_values(&params, cfg.n_per, &mut rng);
            Experiment::from_values(
                id,
                indicator,
                0,
                Some(period),
                quincunx_truth(&params),
                &values,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Dataset::new(
        experiments,
        format!(
            "quincunx ensemble: {} panels of {}, G_hat={}, C={}, cues in [{}, {}], p={}, seed {}",
            cfg.n_experiments,
            cfg.n_per,
            cfg.g_hat,
            cfg.n_cues,
            cfg.cue_low,
            cfg.cue_high,
            cfg.p_cue,
            cfg.seed
        ),
    )
}
