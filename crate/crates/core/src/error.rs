use thiserror::Error;

/// Errors raised by constructors, verifiers and the design file layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DesignError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point set is empty")]
    Empty,

    #[error("point {index} lies at the origin")]
    OriginPoint { index: usize },

    #[error("weight {index} is not strictly positive ({weight})")]
    NonPositiveWeight { index: usize, weight: f64 },

    #[error("point {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("root of degree {degree} did not converge inside [{lo}, {hi}]")]
    NoConvergence { degree: usize, lo: f64, hi: f64 },

    #[error("tightness verdict refused: {0}")]
    TightnessUndefined(String),

    #[error("design is not fully symmetric: {0}")]
    NotFullySymmetric(String),

    #[error("polynomial is not harmonic: {0}")]
    NotHarmonic(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("design file: {0}")]
    Format(String),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, DesignError>;

pub(crate) fn invalid(msg: impl Into<String>) -> DesignError {
    DesignError::InvalidArgument(msg.into())
}
