use thiserror::Error;

/// Errors raised by the library. Everything here is a domain error; the CLI
/// maps them to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error at position {position} (token `{token}`): {message}")]
    Parse {
        token: String,
        position: usize,
        message: String,
    },

    #[error("unknown curve `{name}` at position {position}")]
    UnknownCurve { name: String, position: usize },

    #[error("unknown generator `{name}` at position {position}")]
    UnknownGenerator { name: String, position: usize },

    #[error("words are written over different curve systems")]
    MixedSystems,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("group has an infinite factor: {0}")]
    InfiniteGroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(
        token: impl Into<String>,
        position: usize,
        message: impl Into<String>,
    ) -> Self {
        Error::Parse {
            token: token.into(),
            position,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidArgument(message.into())
    }
}
