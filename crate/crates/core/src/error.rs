use thiserror::Error;

/// Errors raised for malformed input. Mathematical failures (an axiom that
/// does not hold, a cochain that is not a cocycle) are reported through
/// [`crate::report::Report`] values instead, except where an operation cannot
/// proceed at all.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    /// Two entries related by antisymmetry disagree (0-based indices).
    #[error("antisymmetry conflict at 0-based indices {0:?}")]
    AntisymmetryConflict(Vec<usize>),

    #[error("input is not a Lie algebra: Jacobi identity fails at {0:?}")]
    JacobiFailure([usize; 3]),

    #[error("input is not a (left) Leibniz algebra: identity fails at {0:?}")]
    LeibnizFailure([usize; 3]),

    #[error("unsupported degree {degree}: {reason}")]
    UnsupportedDegree { degree: usize, reason: String },

    #[error("not a 2-cocycle: {0}")]
    NotCocycle(String),

    #[error("not a section: {0}")]
    NotSection(String),

    #[error("malformed extension: {0}")]
    MalformedExtension(String),

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("{0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
