use thiserror::Error;

use crate::monomials::CharVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("exponent coefficient overflow")]
    Overflow,

    #[error("invalid character vector entry {0} (entries must be >= -1)")]
    InvalidCharEntry(i64),

    #[error("the unit ideal has no prime decomposition")]
    UnitIdeal,

    #[error("operation requires kind {expected}, found {found}")]
    KindMismatch { expected: String, found: String },

    #[error("duality point {point} does not dominate character vector {offending}")]
    PointNotDominating {
        point: CharVector,
        offending: CharVector,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn check_arity(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected, found })
        }
    }
}
