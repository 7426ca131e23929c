use thiserror::Error;

use crate::algebra::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The caller violated a precondition (mismatched caps, bad dimension, ...).
    #[error("usage error: {0}")]
    Usage(String),

    #[error("not symmetric: {0}")]
    NotSymmetric(String),

    #[error("virtual bundle rejected: {0}")]
    Virtual(String),

    #[error("insufficient {what} coefficients: need {needed}, have {have}")]
    InsufficientCoefficients {
        what: String,
        needed: usize,
        have: usize,
    },

    #[error("not realizable: {0}")]
    NotRealizable(String),

    #[error("input is not a String class: {0}")]
    NotString(String),

    /// Rational solution of a decomposition that failed to be integral.
    #[error("not in the integral lattice: solution ({})", .0.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "))]
    NotIntegral(Vec<Rational>),

    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
