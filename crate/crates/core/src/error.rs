use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} is outside the supported range 1..={max}", max = crate::MAX_DIM)]
    DimensionOutOfRange(usize),

    #[error("expected a homogeneous multivector of grade {expected}")]
    GradeMismatch { expected: usize },

    #[error("grade {grade} is out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("coefficient array has length {found}, expected {expected}")]
    BadLength { expected: usize, found: usize },

    #[error("non-finite coefficient")]
    NonFinite,

    #[error("matrix shape {found:?} does not match expected {expected:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("singular frame: vectors are linearly dependent")]
    SingularFrame,

    #[error("frame vector {0} is not a nonzero vector")]
    NotAVector(usize),

    #[error("singular extensor: determinant {det:e} is below threshold {threshold:e}")]
    SingularExtensor { det: f64, threshold: f64 },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("pseudoscalar must be a nonzero multivector of top grade")]
    InvalidPseudoscalar,

    #[error("invalid index list {0:?}: indices must be strictly ascending within 1..=n")]
    InvalidIndices(Vec<usize>),

    #[error("expected {expected} arguments, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("storage of {entries} entries exceeds the limit of {limit}")]
    TooLarge { entries: usize, limit: usize },

    #[error("operation requires a ({p},{q})-extensor")]
    WrongKind { p: usize, q: usize },

    #[error("component set is malformed: {0}")]
    MalformedComponents(String),
}

pub type Result<T> = std::result::Result<T, Error>;
