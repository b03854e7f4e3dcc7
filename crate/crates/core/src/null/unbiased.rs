//! Unbiased forecasters: each estimate is an independent draw from a
//! Gaussian centred on the truth with the panel's diversity as variance.

use rand::Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::seed::{derive_seed, seeded_rng, SimRng};
use crate::error::{Error, Result};
use crate::panel::{group_id, Dataset, Estimate, Experiment, Quarter};
use crate::stats::diversity_decomposition;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnbiasedSpec {
    pub truth: f64,
    pub delta: f64,
    pub n: usize,
    pub seed: u64,
}

fn normal(truth: f64, delta: f64) -> Result<Normal<f64>> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "delta must be positive and finite, got {delta}"
        )));
    }
    if !truth.is_finite() {
        return Err(Error::NonFinite("truth".into()));
    }
    Normal::new(truth, delta.sqrt()).map_err(|e| Error::InvalidParameter(e.to_string()))
}

fn draw(dist: &Normal<f64>, n: usize, rng: &mut SimRng) -> Vec<f64> {
    (0..n).map(|_| dist.sample(rng)).collect()
}

pub fn sample_unbiased_panel(spec: &UnbiasedSpec) -> Result<Experiment> {
    if spec.n < 2 {
        return Err(Error::TooFewEstimates {
            needed: 2,
            got: spec.n,
        });
    }
    let dist = normal(spec.truth, spec.delta)?;
    let values = draw(&dist, spec.n, &mut seeded_rng(spec.seed));
    Experiment::from_values("unbiased", "unbiased", 0, None, spec.truth, &values)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedExperiment {
    pub id: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Replication {
    pub dataset: Dataset,
    pub skipped: Vec<SkippedExperiment>,
}

/// One synthetic panel per experiment, keeping N and G and drawing from
/// Normal(G, delta) with the experiment's own diversity.
pub fn replicate_dataset_unbiased(dataset: &Dataset, seed: u64) -> Result<Replication> {
    replicate_dataset_unbiased_round(dataset, seed, 0)
}

/// As [`replicate_dataset_unbiased`], for replicate number `round`.
pub fn replicate_dataset_unbiased_round(
    dataset: &Dataset,
    seed: u64,
    round: u64,
) -> Result<Replication> {
    let outcomes: Vec<Result<Experiment, SkippedExperiment>> = dataset
        .experiments()
        .par_iter()
        .map(|e| {
            let skip = |reason: String| SkippedExperiment {
                id: e.id.clone(),
                reason,
            };
            let delta = diversity_decomposition(e)
                .map_err(|err| skip(err.to_string()))?
                .delta;
            if delta <= 0.0 {
                return Err(skip("zero diversity".into()));
            }
            let dist = normal(e.truth, delta).map_err(|err| skip(err.to_string()))?;
            let mut rng = seeded_rng(derive_seed(seed, &e.id, round));
            let estimates = e
                .estimates()
                .iter()
                .map(|est| Estimate {
                    forecaster_id: est.forecaster_id.clone(),
                    value: dist.sample(&mut rng),
                })
                .collect();
            Experiment::new(
                e.id.clone(),
                e.indicator.clone(),
                e.horizon,
                e.survey_period,
                e.truth,
                estimates,
            )
            .map_err(|err| skip(err.to_string()))
        })
        .collect();
    let mut experiments = Vec::with_capacity(outcomes.len());
    let mut skipped = Vec::new();
    for o in outcomes {
        match o {
            Ok(e) => experiments.push(e),
            Err(s) => skipped.push(s),
        }
    }
    Ok(Replication {
        dataset: Dataset::new(
            experiments,
            format!(
                "unbiased replication (seed {seed}, round {round}) of {}",
                dataset.provenance
            ),
        )?,
        skipped,
    })
}

/// Synthetic ensemble of unbiased panels with N drawn uniformly from
/// `[n_min, n_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnbiasedEnsemble {
    pub n_experiments: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub truth: f64,
    pub delta: f64,
    pub seed: u64,
}

impl Default for UnbiasedEnsemble {
    fn default() -> Self {
        Self {
            n_experiments: 10_000,
            n_min: 9,
            n_max: 87,
            truth: 100.0,
            delta: 4.0,
            seed: 0,
        }
    }
}

pub(crate) fn synthetic_period() -> Quarter {
    Quarter::new(2000, 1).expect("valid quarter")
}

pub fn unbiased_ensemble(cfg: &UnbiasedEnsemble) -> Result<Dataset> {
    if cfg.n_min < 2 || cfg.n_max < cfg.n_min {
        return Err(Error::InvalidParameter(format!(
            "N range [{}, {}] must satisfy 2 <= n_min <= n_max",
            cfg.n_min, cfg.n_max
        )));
    }
    let dist = normal(cfg.truth, cfg.delta)?;
    let period = synthetic_period();
    let experiments = (0..cfg.n_experiments)
        .into_par_iter()
        .map(|i| {
            let indicator = format!("unbiased{i:05}");
            let id = group_id(&indicator, 0, period);
            let mut rng = seeded_rng(derive_seed(cfg.seed, &id, 0));
            let n = rng.random_range(cfg.n_min..=cfg.n_max);
            let values = draw(&dist, n, &mut rng);
            Experiment::from_values(id, indicator, 0, Some(period), cfg.truth, &values)
        })
        .collect::<Result<Vec<_>>>()?;
    Dataset::new(
        experiments,
        format!(
            "unbiased ensemble: {} panels, N in [{}, {}], G={}, delta={}, seed {}",
            cfg.n_experiments, cfg.n_min, cfg.n_max, cfg.truth, cfg.delta, cfg.seed
        ),
    )
}
