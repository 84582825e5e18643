use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count {0} outside supported range 1..=24")]
    UnsupportedVariableCount(usize),

    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("epsilon {0} outside (0, 1/2)")]
    EpsilonOutOfRange(f64),

    #[error("a bent function needs an even variable count >= 2, got {0}")]
    OddVariableCount(usize),

    #[error("planted distance {k} must be below 2^(n-2) = {limit}")]
    PlantedDistanceTooLarge { k: usize, limit: usize },

    #[error("state norm {0} deviates from 1")]
    NotNormalized(f64),

    #[error("bad input: {0}")]
    Parse(String),

    #[error("infeasible configuration: {0}")]
    Infeasible(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
