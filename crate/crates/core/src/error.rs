use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A token in a textual vector could not be parsed. `position` is 1-based.
    #[error("cannot parse token {token:?} at position {position}")]
    Parse { token: String, position: usize },

    /// Derived quantities contradict each other (e.g. no weight-enumerator
    /// family fits the observed counts).
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("record format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
