use thiserror::Error;

/// Errors raised by ideal, complex and classification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: out-of-range indices, mismatched universes, bad vectors.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The operation is undefined for this value (e.g. the dual of the unit ideal).
    #[error("domain error: {0}")]
    Domain(String),
    /// Every summand vanished, so the sum is the zero ideal.
    #[error("the summands define the zero ideal")]
    ZeroIdeal,
    /// A summand `I_0 J_0` is the whole ring.
    #[error("summand 0:0 is the unit ideal; mixed product ideals must be proper")]
    NonProper,
    /// An explicit enumeration would exceed a configured limit.
    #[error("resource limit exceeded: {what} is {actual}, limit {limit}")]
    Resource {
        what: &'static str,
        actual: u128,
        limit: u128,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
