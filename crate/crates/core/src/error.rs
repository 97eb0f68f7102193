use thiserror::Error;

use crate::tangle::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a fraction")]
    ZeroOverZero,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("slope is infinite (1/0); not a rational 3-tangle of the stated kind")]
    InfiniteSlope,

    #[error("continued fraction evaluates to infinity")]
    InfiniteValue,

    #[error("cannot parse fraction {0:?}")]
    ParseFraction(String),

    #[error("inconsistent tangle flags: {0}")]
    InconsistentFlags(String),

    #[error("satellite, cable and Hopf-summand are mutually exclusive: {0}")]
    MutualExclusivity(String),

    #[error("invalid torus parameters ({p}, {q}): {reason}")]
    InvalidTorusParams { p: i64, q: i64, reason: &'static str },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid annulus profile: {0}")]
    InvalidProfile(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),

    #[error("census bound {bound} exceeds the maximum {max}")]
    BoundsTooLarge { bound: i64, max: i64 },
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        v.into_error()
    }
}
