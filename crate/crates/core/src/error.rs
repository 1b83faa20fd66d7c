use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Input violates a general-position requirement. Callers perturb.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// An exhaustive enumeration was asked to run beyond its guard.
    #[error("{what}: size {requested} exceeds the enumeration guard {limit}")]
    ResourceGuard {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
