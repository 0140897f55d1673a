use thiserror::Error;

/// Errors raised by the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("variable mismatch: expected {expected:?}, found {found:?}")]
    VariableMismatch { expected: Vec<String>, found: Vec<String> },
    #[error("point has {found} coordinates but the polynomial has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },
    #[error("matrix dimension {0} is odd; a Pfaffian needs an even dimension")]
    OddDimension(usize),
    #[error("dimension {found} exceeds the supported maximum {max}")]
    DimensionTooLarge { found: usize, max: usize },
    #[error("matrix shapes {left:?} and {right:?} are incompatible")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("the zero form has no resultant, roots or discriminant")]
    ZeroForm,
    #[error("matrix is singular")]
    Singular,
    #[error("polynomial has degree 0")]
    ConstantPolynomial,
    #[error("could not certify roots at {bits} bits within the iteration budget")]
    PrecisionUnachievable { bits: u32 },
    #[error("malformed scalar literal {0:?}")]
    ParseScalar(String),
}

pub type Result<T> = std::result::Result<T, ExactError>;
