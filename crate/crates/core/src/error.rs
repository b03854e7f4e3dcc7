use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A configured column is absent from the CSV header.
    #[error("schema error: missing column `{0}`")]
    MissingColumn(String),

    #[error("line {line}: {message}")]
    Row { line: u64, message: String },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("invalid quarter `{0}` (expected YYYYQn)")]
    Quarter(String),

    #[error("duplicate forecaster `{forecaster}` in group {group}")]
    DuplicateForecaster { group: String, forecaster: String },

    #[error("duplicate key {0}")]
    DuplicateKey(String),

    #[error("guessing file: {0}")]
    Guessing(String),

    #[error("empty panel")]
    EmptyPanel,

    #[error("panel needs at least {needed} estimates, got {got}")]
    TooFewEstimates { needed: usize, got: usize },

    #[error("skewness undefined: zero diversity")]
    UndefinedSkew,

    /// A scaled statistic would divide by zero.
    #[error("scaled field undefined: denominator `{0}` is zero")]
    ZeroDenominator(&'static str),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown experiment `{0}`")]
    UnknownExperiment(String),

    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
}
