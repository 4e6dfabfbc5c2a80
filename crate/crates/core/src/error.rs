use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: usize, found: usize },

    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("matrix is not symmetric")]
    AsymmetricMatrix,

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
