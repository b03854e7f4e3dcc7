//! Generative null models: unbiased Gaussian forecasters and the augmented
//! quincunx. Every sampler is a pure function of its parameters and seed.

pub mod quincunx;
pub mod seed;
pub mod unbiased;

pub use quincunx::{
    quincunx_ensemble, quincunx_truth, sample_quincunx_panel, QuincunxEnsemble, QuincunxParams,
};
pub use seed::{derive_seed, seeded_rng, SimRng};
pub use unbiased::{
    replicate_dataset_unbiased, replicate_dataset_unbiased_round, sample_unbiased_panel,
    unbiased_ensemble, Replication, SkippedExperiment, UnbiasedEnsemble, UnbiasedSpec,
};
