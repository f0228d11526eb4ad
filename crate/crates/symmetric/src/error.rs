use solvgeom_algebra::AlgebraError;
use solvgeom_curvature::CurvatureError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymmetricError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("matrix span is not closed under the commutator (residual {residual:.3e})")]
    NotClosed { residual: f64 },
    #[error("basis is not orthonormal for the trace form (residual {residual:.3e})")]
    NotOrthonormal { residual: f64 },
    #[error("basis vector {index} is not a root vector for its declared root (residual {residual:.3e})")]
    RootMismatch { index: usize, residual: f64 },
    #[error("bracket of basis vectors {i} and {j} is not a multiple of a single basis vector")]
    NotMonomial { i: usize, j: usize },
    #[error("twist is not closed under the bracket: {} violating structure constants", .0.len())]
    ClosureViolation(Vec<(usize, usize, usize)>),
    #[error("twist has {got} bits, algebra has dimension {expected}")]
    TwistLength { expected: usize, got: usize },
    #[error("twist assigns parity 1 to the Cartan vector {0}")]
    TwistOnCartan(usize),
    #[error("operation needs {expected}, algebra is {got}")]
    WrongSpace { expected: &'static str, got: String },
    #[error("invalid base of the root system: {0}")]
    BadBase(String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
}
