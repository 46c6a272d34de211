use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Each variant maps onto one CLI exit class: `Resource` exits with 3, every
/// other variant is a domain failure (exit 1).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} exponents, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("operands live in different ambient rings")]
    AmbientMismatch,

    #[error("invalid ring: {0}")]
    Ring(String),

    #[error("{0}")]
    Domain(String),

    #[error("resource cap exceeded: {0}")]
    Resource(String),

    #[error("trace formula is only conjectural here: {0}")]
    Conjectural(String),

    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
