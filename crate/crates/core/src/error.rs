use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A config key held a value outside its domain.
    #[error("invalid value for `{key}`: {reason}")]
    Validation { key: String, reason: String },

    /// The config document itself could not be read.
    #[error("config line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// Simulation state went non-finite; the run was aborted.
    #[error("non-finite state at tick {tick}: {detail}")]
    NonFinite { tick: u64, detail: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn validation(key: &str, reason: impl Into<String>) -> Self {
        Error::Validation {
            key: key.to_string(),
            reason: reason.into(),
        }
    }

    /// Process exit code for the CLI: 1 for bad input, 2 for runtime failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) | Error::Validation { .. } | Error::Parse { .. } => 1,
            Error::NonFinite { .. } | Error::Io(_) => 2,
        }
    }
}
