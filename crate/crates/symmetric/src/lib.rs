//! Iwasawa solvable algebras of the classical non-compact symmetric spaces
//! and the sign twists obtained by multiplying nilradical basis vectors by
//! `sqrt(-1)` in the complexification.
//!
//! Every algebra is built from an explicit complex matrix realization: the
//! commutators of the basis matrices are decomposed back into the basis, and
//! the metric is the trace form `<X,Y> = 1/4 Re tr((X + X*)(Y + Y*))`, which
//! is proportional to the Killing-form metric `B` on `a` and `-B(X, theta Y)/2`
//! on `n` with `theta X = -X*`. The proportionality constant is divided out so
//! that the basis is orthonormal.
//!
//! A twist never leaves the real algebra. If `X` and `Y` both become
//! `sqrt(-1) X` and `sqrt(-1) Y`, their bracket changes sign; if only one of
//! them does, the bracket picks up the same factor and is again a basis vector
//! of the twisted span exactly when the parities add up mod 2. So a twist is a
//! bit per basis vector plus the sign rule `c' = (-1)^(p_i p_j) c`.

mod builders;
mod error;
mod gf2;
mod named;
mod realization;
mod rootalg;
mod roots;
mod table;
mod twist;
mod witness;

pub use builders::{
    build_sl_nh, build_sl_nr, build_so_nh, build_so_pq, build_sp_pq, build_su_pq, build_type_iv_sl,
};
pub use error::SymmetricError;
pub use named::{named_twist_sl_nh, named_twist_so_nh, type_iv_twist, wa_twist};
pub use rootalg::{BasisConditions, RootDecoratedAlgebra, Space};
pub use roots::{enumerate_twists, expand_in_base, restricted_height_twist, simple_roots, TwistEnumeration};
pub use table::{bracket_table, format_coefficient, table_mismatch, TableMismatch};
pub use twist::{
    einstein_preservation_check, twist, twist_closure_check, ClosureReport, PreservationReport, TwistAssignment,
};
pub use witness::{sl_nh_witness, so_nh_witness, type_iv_witness, wa_witness, WitnessPair};

pub type Result<T, E = SymmetricError> = std::result::Result<T, E>;
