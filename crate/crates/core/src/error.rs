use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which operand of a two-argument check violated a precondition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    First,
    Second,
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::First => f.write_str("first"),
            Operand::Second => f.write_str("second"),
        }
    }
}

/// Precondition failures of the reciprocity checks, one variant per diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Precondition {
    #[error("{0} argument is not a prime element")]
    NotPrime(Operand),
    #[error("{0} argument is not primary")]
    NotPrimary(Operand),
    #[error("{0} argument has ramified norm")]
    RamifiedNorm(Operand),
    #[error("{0} argument has even norm")]
    EvenNorm(Operand),
    #[error("arguments have equal norms")]
    EqualNorms,
    #[error("arguments are not coprime")]
    NotCoprime,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource guard exceeded: {0}")]
    Resource(String),
    #[error("operand mismatch: {0}")]
    Mismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(#[from] Precondition),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
