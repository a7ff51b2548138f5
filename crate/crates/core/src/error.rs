use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An exhaustive computation was asked to run past its configured size.
    #[error("{what} of size {size} exceeds the configured limit {limit}")]
    ResourceLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// A quantity that counts tableaux came out non-integral.
    #[error("expected an integer count, got {0}")]
    NonIntegral(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
