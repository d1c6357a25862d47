use thiserror::Error;

use crate::algebra::Integer;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("complex has no simplices")]
    EmptyComplex,

    #[error("simplex {0:?} is not strictly increasing")]
    NotIncreasing(Vec<u32>),

    #[error("simplex {0:?} is not non-decreasing")]
    NotMonotone(Vec<u32>),

    #[error("operator index {index} out of range for a {dim}-simplex")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("product factors have different dimensions")]
    MismatchedDimensions,

    #[error("expected arity {expected}, got {actual}")]
    WrongArity { expected: usize, actual: usize },

    #[error("expected degree {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("cochain of degree {degree} is not a cocycle")]
    NotACocycle { degree: usize },

    #[error("integral homology has torsion Z/{coefficient} in degree {degree}")]
    Torsion { degree: usize, coefficient: Integer },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}
