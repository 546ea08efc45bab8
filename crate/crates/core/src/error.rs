use thiserror::Error;

/// Errors raised by the arithmetic, matrix and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator {denominator} is not invertible modulo {modulus}")]
    NonInvertibleDenominator { denominator: String, modulus: u64 },
    #[error("matrix of size {n} exceeds the limit {max} for this algorithm")]
    SizeLimit { n: usize, max: usize },
    #[error("ring {0} does not support exact division")]
    UnsupportedRing(String),
    #[error("no prime p = 1 (mod {order}) found below {bound}")]
    SearchExhausted { order: u64, bound: u64 },
    #[error("family {family}: parameter makes the matrix undefined ({detail})")]
    SingularFamily { family: String, detail: String },
    #[error("expected a rational value, got {0}")]
    NonRationalResult(String),
    #[error("elements from different rings: {0}")]
    RingMismatch(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
