use solvgeom_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CarnotError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("matrix {index} is {rows}x{cols}, expected {r}x{r}")]
    Shape { index: usize, rows: usize, cols: usize, r: usize },
    #[error("matrix {index} is not skew-symmetric (residual {residual:e})")]
    NotSkew { index: usize, residual: f64 },
    #[error("r must be at least 1")]
    EmptyV,
    #[error("the Einstein conditions need s >= 1")]
    EmptyCenter,
    #[error("z is not central in n")]
    NotCentral,
    #[error("[v, v] is not contained in z")]
    NotTwoStep,
    #[error("v and z basis vectors are not orthonormal")]
    NotOrthonormal,
    #[error("matrices are linearly dependent")]
    Dependent,
    #[error("subspace is not uniform (residual {0:e})")]
    NotUniform(f64),
    #[error("coefficient rows are not orthonormal (residual {0:e})")]
    RowsNotOrthonormal(f64),
    #[error("invalid search parameters: {0}")]
    InvalidSearch(String),
}
