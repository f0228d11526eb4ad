use solvgeom_carnot::CarnotError;
use solvgeom_curvature::CurvatureError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum So6Error {
    #[error("(r, s, t) must be a nonzero finite vector")]
    ZeroVector,
    #[error("tau expects 3x3 matrices")]
    Shape,
    #[error("real part is not skew-symmetric")]
    NotSkew,
    #[error("imaginary part is not symmetric")]
    NotSymmetric,
    #[error("[W, W] vanishes, so the bracket angle is undefined")]
    BracketVanishes,
    #[error("grid resolution must be at least 2")]
    GridTooSmall,
    #[error(transparent)]
    Carnot(#[from] CarnotError),
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
}
