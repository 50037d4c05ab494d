use crate::linalg::LinalgError;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed or inconsistent caller input.
    #[error("input error: {0}")]
    Input(String),
    /// Algebra or module data that violates a structural law.
    #[error("validation error: {0}")]
    Validation(String),
    /// The operation is not available for this kind of input.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A kernel left the ambient object list (AB1 failing on an instance).
    #[error("kernel {kernel} is not in the object list")]
    KernelOutsideCategory { kernel: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    /// An internal invariant failed; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
