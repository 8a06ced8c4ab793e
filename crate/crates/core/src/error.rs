use thiserror::Error;

/// Errors raised by the exact-arithmetic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0}: rank must be at least 2")]
    InvalidRank(usize),

    #[error("pairing of {coords:?} with root e{plus}-e{minus} is not an integer")]
    NonIntegralPairing {
        coords: Vec<i64>,
        plus: usize,
        minus: usize,
    },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("span has dimension {actual}, expected {expected}")]
    WrongCodimension { expected: usize, actual: usize },

    #[error("hyperplane ratio undefined: coordinate {0} of the weight is zero")]
    UndefinedRatio(usize),

    #[error("degenerate coordinate pair ({0}, {0})")]
    DegeneratePair(usize),

    #[error("invalid partition {parts:?} of {n}")]
    InvalidPartition { n: u64, parts: Vec<u64> },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("certificate verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
