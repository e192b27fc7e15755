use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("expected {expected} blossom arguments, got {actual}")]
    ArgumentCount { expected: usize, actual: usize },
    #[error("monomial index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("coefficient grid has shape {actual:?}, expected {expected:?}")]
    Shape {
        expected: (usize, usize),
        actual: (usize, usize),
    },
    #[error("invalid triangular loop parameters: {0}")]
    Bounds(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
