use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "crowdcheck",
    version,
    about = "Wisdom-of-crowds diagnostics for forecast panels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand. Each may also be set in the
/// `--config` file; flags win.
#[derive(Debug, Args, Clone, Default)]
pub struct Common {
    /// Forecast CSVs or guessing-experiment files.
    pub inputs: Vec<PathBuf>,

    /// key=value config file
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Truth CSV used to join forecast CSVs.
    #[arg(long)]
    pub truths: Option<PathBuf>,

    /// Horizons to keep (repeat or comma-separate); default keeps all.
    #[arg(long, value_delimiter = ',')]
    pub horizon: Vec<u32>,

    #[arg(long)]
    pub min_n: Option<usize>,

    #[arg(long)]
    pub seed: Option<u64>,

    #[arg(long)]
    pub n_perm: Option<u64>,

    #[arg(long)]
    pub bins: Option<usize>,

    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Missing-value marker in forecast CSVs.
    #[arg(long)]
    pub sentinel: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Assemble inputs into experiments and write the normalized tables.
    Ingest(Common),
    /// Per-experiment crowd statistics.
    Summarize(Common),
    /// Pairs of two statistics across experiments with their rank correlation.
    Scatter {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        /// Report Pearson instead of Spearman.
        #[arg(long)]
        pearson: bool,
    },
    /// Histogram of the fraction of individuals beating the crowd.
    XiHist(Common),
    /// Histogram of bias-test p-values.
    BiasHist(Common),
    /// Histogram of relative estimates for one experiment.
    EstHist {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        id: Option<String>,
    },
    /// Replace inputs by unbiased forecasters, or generate a synthetic unbiased ensemble.
    SimulateUnbiased {
        #[command(flatten)]
        common: Common,
        /// Replicates per input experiment.
        #[arg(long)]
        replicates: Option<u64>,
        #[arg(long)]
        n_experiments: Option<usize>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        truth: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
    },
    /// Generate an augmented quincunx ensemble.
    SimulateQuincunx {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        g_hat: Option<f64>,
        #[arg(long)]
        n_cues: Option<usize>,
        #[arg(long)]
        cue_low: Option<f64>,
        #[arg(long)]
        cue_high: Option<f64>,
        #[arg(long)]
        p_cue: Option<f64>,
        #[arg(long)]
        n_experiments: Option<usize>,
        #[arg(long)]
        n_per: Option<usize>,
        /// Shift cues to sum to zero so that the truth equals the prototype.
        #[arg(long)]
        centered_cues: bool,
    },
}
