//! Uniform three-dimensional subspaces `W(r, s, t)` of `so(6)`.
//!
//! `u(3)` embeds in `so(6)` by `tau(X + iY) = [[X, Y], [-Y, X]]`. Three
//! orthonormal triples `A_i`, `B_i`, `C_i` (images of real skew, imaginary
//! off-diagonal symmetric, and imaginary diagonal matrices) pairwise
//! anticommute for equal index, so `D_i = r A_i + s B_i + t C_i` spans a
//! uniform subspace whenever `r^2 + s^2 + t^2 = 1`.

mod angles;
mod basis;
mod error;
mod margin;
mod report;

pub use angles::{
    angle_to_centralizer, bracket_angle, bracket_angle_closed_form, bracket_angle_corrected, centralizer_in_so6,
};
pub use basis::{basis_abc, tau, w_of, AbcBasis, FamilyPoint, SignMask};
pub use error::So6Error;
pub use margin::{inequality_margin, negative_curvature_margin, plane_margin, MarginOptions, MarginReport};
pub use report::{family_grid, family_report, family_report_csv, sample_sectional_range, FamilyRow, REPORT_HEADER};

pub type Result<T, E = So6Error> = std::result::Result<T, E>;
