//! Rank correlation, permutation significance, the bias test and the
//! special functions they rely on.

pub mod bias;
pub mod erf;
pub mod permutation;
pub mod rank;

pub use bias::{bias_p_value, bias_test, BiasTestResult};
pub use erf::{erf, erfc};
pub use permutation::{
    correlation_p, correlation_test, CorrelationOptions, CorrelationResult, Enumeration,
    PValueMethod, DEFAULT_N_PERM,
};
pub use rank::{average_ranks, pearson_r, spearman_rho, CorrelationKind};
