//! Wisdom-of-crowds diagnostics for panels of point forecasts.
//!
//! * [`panel`] reads forecast, truth and guessing files into a [`Dataset`].
//! * [`stats`] computes the per-panel crowd statistics.
//! * [`inference`] holds rank correlation with permutation p-values and the
//!   bias test of the crowd mean against unbiased forecasters.
//! * [`null`] simulates unbiased Gaussian and augmented quincunx forecasters.
//! * [`report`] turns datasets into plot-ready tables.

pub mod config;
pub mod error;
pub mod format;
pub mod inference;
pub mod null;
pub mod panel;
pub mod reference;
pub mod report;
pub mod stats;

pub use error::{Error, Result};
pub use inference::{BiasTestResult, CorrelationResult};
pub use null::QuincunxParams;
pub use panel::{Dataset, Estimate, Experiment, Quarter, TruthTable};
pub use report::HistogramTable;
pub use stats::SummaryStats;
