use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel, the series layer and the
/// identity verifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational {0:?}")]
    ParseRational(String),

    #[error("invalid polynomial {0:?}")]
    ParsePoly(String),

    #[error("rational function with zero denominator")]
    ZeroDenominator,

    #[error("invalid composition: inner series has a nonzero constant term")]
    InvalidComposition,

    #[error("derivative of order {n} leaves nothing of a series of order {order}")]
    EmptyDerivative { n: usize, order: usize },

    #[error("coefficient t^{index} is outside a series of order {order}")]
    CoeffOutOfRange { index: usize, order: usize },

    #[error("series order must be at least {min}, got {got}")]
    OrderTooSmall { min: usize, got: usize },

    /// A parameter grid violates the domain of the identity being checked.
    #[error("{id} requires {constraint}")]
    Precondition { id: String, constraint: String },

    #[error("parameter {0} out of range")]
    OutOfTriangle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
