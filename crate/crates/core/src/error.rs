use thiserror::Error;

use crate::structure::Decomposition;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {0} exceeds the supported maximum of {max}", max = crate::gf2::MAX_DIM)]
    DimensionTooLarge(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("value {value:#x} does not fit in {n} bits")]
    OutOfRange { value: u64, n: usize },

    #[error("empty input")]
    Empty,

    #[error("the zero vector has no transform sending it to e1")]
    ZeroVector,

    #[error("matrix is singular over F2")]
    Singular,

    #[error("spectrum does not invert to a 0/1-valued function")]
    NotBoolean,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("spectrum is out of scope: coefficients outside {{0, +-1/2^k, +-2/2^k}} or f(0) not in {{1/2^k, 2/2^k}}")]
    OutOfScope,

    #[error("function is identically zero")]
    ZeroFunction,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("structural claim violated: {0}")]
    ClaimViolated(String),

    #[error("decomposition failed verification")]
    VerificationFailed(Box<Decomposition>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
