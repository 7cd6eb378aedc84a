use thiserror::Error;

use crate::semiring::SemiringKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semiring mismatch: {left} vs {right}")]
    TagMismatch { left: SemiringKind, right: SemiringKind },

    #[error("tropical vanishing is undefined for an empty list of terms")]
    EmptyTerms,

    #[error("truncation exhausted: cannot differentiate a series known only through degree {0}")]
    TruncationExhausted(u32),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unsupported template: {0}")]
    UnsupportedTemplate(String),

    #[error("unsupported equation: {0}")]
    UnsupportedEquation(String),

    #[error("resource budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
