//! Fixtures shared by the benchmarks.

use crowdcheck_core::null::{unbiased_ensemble, UnbiasedEnsemble};
use crowdcheck_core::Dataset;

/// Unbiased panels with N in `[9, 87]`, the size range of the survey panels.
pub fn survey_sized_dataset(n_experiments: usize, seed: u64) -> Dataset {
    unbiased_ensemble(&UnbiasedEnsemble {
        n_experiments,
        seed,
        ..Default::default()
    })
    .expect("valid ensemble config")
}
