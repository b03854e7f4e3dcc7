//! Plot-ready tables for every study the CLI runs.

pub mod histogram;
pub mod studies;

pub use histogram::{empirical_cdf, natural_fraction_edges, uniform_edges, HistogramTable, Marker};
pub use studies::{
    bias_histogram, estimates_histogram, mean_sd, scatter, summary_report, write_skipped_csv,
    xi_histogram, BiasReport, BiasRow, EstimatesReport, ScatterReport, Statistic, SummaryReport,
    XiReport, DEFAULT_BINS, MARKER_CDF_005, MARKER_CDF_HALF, MARKER_CROWD, MARKER_TRUTH_RATIO,
    MARKER_XI_ZERO,
};
