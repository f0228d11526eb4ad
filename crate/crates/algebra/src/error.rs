use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("structure constants are not antisymmetric at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("non-finite number in {0}")]
    NonFinite(&'static str),
    #[error("gram matrix is not symmetric positive definite (min eigenvalue {min_eig:e})")]
    GramNotPositive { min_eig: f64 },
    #[error("malformed algebra document: {0}")]
    Malformed(String),
    #[error("decoration missing")]
    DecorationMissing,
    #[error("invalid decoration: {0}")]
    InvalidDecoration(String),
    #[error("nilradical indices do not span an ideal (leak {leak:e})")]
    NotAnIdeal { leak: f64 },
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("span is not closed under the bracket (residual {residual:e})")]
    NotClosed { residual: f64 },
}
