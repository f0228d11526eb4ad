//! Rank-one solvmanifolds of eigenvalue type (1,2;r,s) built from two-step
//! nilpotent data, and uniform subspaces of `so(r)`.
//!
//! A data triple is a list of skew matrices `j(Z_1), ..., j(Z_s)` acting on
//! `v = R^r`, one per vector of an orthonormal basis of `z = R^s`. The
//! nilpotent bracket is recovered from `<j(Z) X, Y> = <[X, Y], Z>`.
//!
//! Subspaces of `so(r)` carry the inner product `(a, b) = -tr(ab) / r`, so the
//! identity-scaled rotations have unit length. A subspace is uniform when an
//! orthonormal basis satisfies `sum a_i^2 = -s Id`.

mod error;
mod invariants;
mod quaternion;
mod search;
mod skew;
mod triple;
mod uniform;

pub use error::CarnotError;
pub use invariants::{classify_so4, equivalence_invariants, fingerprints_match, So4Class, So4Classification};
pub use quaternion::{left_mult, pair_to_so4, right_mult};
pub use search::{search_uniform, SearchOptions, SearchResult};
pub use skew::{from_skew_coords, skew_basis, skew_coords, skew_inner, skew_orthonormalize};
pub use triple::{brackets_from_j, build_solvmanifold, einstein_conditions, j_from_brackets, DataTriple, EinsteinConditions};
pub use uniform::{complement_uniform, is_uniform, so4_criterion, uniformity_residual, UniformSubspaceCandidate};

pub type Result<T, E = CarnotError> = std::result::Result<T, E>;
