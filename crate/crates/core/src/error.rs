use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation: bad index, mismatched
    /// dimensions, a table that is not a bijection.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request would materialize more than the configured bound.
    #[error("resource cap exceeded: {what} needs {requested}, cap is {cap}")]
    ResourceCap {
        what: String,
        requested: u64,
        cap: u64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
