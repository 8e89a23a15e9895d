use thiserror::Error;

/// Errors raised by the exact and real layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("element is not integral")]
    NonIntegral,

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("empty coefficient sequence")]
    Empty,

    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("denominator vanishes identically after substitution")]
    ZeroDenominator,

    #[error("variable `{0}` has no binding")]
    UnboundVariable(String),

    #[error("coefficient {0} does not embed into the target ring")]
    NotEmbeddable(String),

    #[error("composition undefined: denominator vanishes at this point")]
    UndefinedComposition,

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("velocity {value} outside the admissible range for c = {c}")]
    Superluminal { value: f64, c: f64 },

    #[error("frames with different light speeds: {left} vs {right}")]
    LightSpeedMismatch { left: f64, right: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
