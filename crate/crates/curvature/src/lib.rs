//! Curvature of left-invariant metrics on Lie groups, computed from the
//! metric Lie algebra.
//!
//! The Ricci form is evaluated with the four-term formula
//!
//! ```text
//! ric(X,Y) = -1/2 sum_i <[X,X_i],[Y,X_i]> - 1/2 B(X,Y)
//!            + 1/4 sum_{i,j} <[X_i,X_j],X><[X_i,X_j],Y> - <U(X,Y),H>
//! ```
//!
//! over an orthonormal basis `X_i`, where `B` is the Killing form, `U` is the
//! symmetric map `<U(X,Y),Z> = 1/2<[Z,X],Y> + 1/2<[Z,Y],X>` and
//! `H = sum_i U(X_i,X_i)` is the mean curvature vector.

mod eigentype;
mod ricci;

pub use eigentype::{eigenvalue_type, EigenvalueType};
pub use ricci::{
    einstein_verdict, mean_curvature, rank_one_reduction, ricci, sectional, u_map, EinsteinVerdict,
};

use solvgeom_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurvatureError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("vectors span less than a 2-plane")]
    Degenerate,
    #[error("mean curvature vector vanishes")]
    ZeroMeanCurvature,
    #[error("eigenvalue {re} + {im}i of ad(H) on the nilradical is not real")]
    NonRealEigenvalue { re: f64, im: f64 },
    #[error("eigenvalue {0} of ad(H) on the nilradical is not positive")]
    NonPositiveEigenvalue(f64),
    #[error("irrational eigenvalue ratio {0}")]
    IrrationalRatio(f64),
}

pub type Result<T, E = CurvatureError> = std::result::Result<T, E>;
