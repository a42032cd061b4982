use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps these onto its exit-code contract: argument-level problems
/// ([`Error::Parse`], [`Error::WeightMismatch`], [`Error::InvalidArgument`])
/// are usage errors, [`Error::Capacity`] means a configured limit was
/// exceeded, and [`Error::Internal`] signals an arithmetic bug that should
/// never occur on valid input.
#[derive(Debug, Error)]
pub enum Error {
    /// A partition string could not be parsed; names the offending token.
    #[error("invalid partition: {0}")]
    Parse(String),

    /// Two partitions that must have equal weight do not.
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configured capacity (enumeration budget, character-table limit)
    /// was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An internal consistency check failed. Reaching this variant means
    /// the arithmetic itself is broken, not the input.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code for the CLI contract: 2 usage, 3 capacity.
    /// Internal errors and I/O failures get 4, outside the documented codes.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse(_) | Error::WeightMismatch(_) | Error::InvalidArgument(_) => 2,
            Error::Capacity(_) => 3,
            Error::Internal(_) | Error::Io(_) => 4,
        }
    }
}
