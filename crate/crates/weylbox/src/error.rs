use thiserror::Error;

/// Failure categories for library operations.
///
/// `Argument` marks preconditions the caller can fix (bad axis, non-unit
/// parameter vector, empty basis). `Numeric` marks breakdowns inside an
/// algorithm (rank loss, continuum-like singular-value profile, step-size
/// underflow). `Consistency` marks inputs that were once valid but no longer
/// agree with the data they came from (stale eigenvalue, unnormalized state).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("inconsistent input: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
