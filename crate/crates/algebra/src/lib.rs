//! Finite-dimensional real Lie algebras with an inner product.
//!
//! A [`MetricLieAlgebra`] stores its bracket as a sparse structure-constant
//! tensor `[e_i, e_j] = sum_k c[i][j][k] e_k` kept in canonical `i < j` order,
//! so antisymmetry holds by construction. The inner product is a Gram matrix
//! on the same basis. An optional [`Decoration`] records an Iwasawa splitting
//! `s = a + n` together with the root functional of each nilradical vector.

mod document;
mod error;
mod iwasawa;
pub mod linalg;
mod metric;

pub use document::{deserialize, serialize};
pub use error::AlgebraError;
pub use iwasawa::{iwasawa_check, IwasawaReport};
pub use metric::{
    antisymmetry_residual, jacobi_residual_tensor, Decoration, MetricLieAlgebra, StructureEntry,
    ValidationReport,
};

/// Numerical tolerances shared by every crate in the workspace.
pub mod tol {
    /// Identities among closed-form constants evaluated in double precision.
    pub const EXACT: f64 = 1e-10;
    /// Quantities produced by an optimizer.
    pub const OPT: f64 = 1e-6;
    /// Default relative tolerance of the Einstein test.
    pub const EINSTEIN: f64 = 1e-9;
    /// Structure constants smaller than this are treated as zero when an
    /// algebra is read off from a matrix realization.
    pub const ZERO: f64 = 1e-12;
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
