use nalgebra::DVector;
use solvgeom_curvature::{sectional, u_map};

use crate::named::{family, w_column};
use crate::rootalg::{RootDecoratedAlgebra, Space};
use crate::{Result, SymmetricError};

/// An orthonormal pair spanning a plane of positive curvature in a twisted
/// algebra, in basis coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessPair {
    pub x: DVector<f64>,
    pub y: DVector<f64>,
}

impl WitnessPair {
    fn from_terms(alg: &RootDecoratedAlgebra, x: &[(&str, f64)], y: &[(&str, f64)]) -> Result<Self> {
        let vector = |terms: &[(&str, f64)]| -> Result<DVector<f64>> {
            let mut v = DVector::zeros(alg.dim());
            for &(tag, c) in terms {
                v[alg.index_of(tag)?] += c;
            }
            Ok(v)
        };
        Ok(Self { x: vector(x)?, y: vector(y)? })
    }

    pub fn sectional(&self, alg: &RootDecoratedAlgebra) -> Result<f64> {
        Ok(sectional(alg.base(), &self.x, &self.y)?)
    }

    /// `|[X, Y]|`.
    pub fn bracket_norm(&self, alg: &RootDecoratedAlgebra) -> Result<f64> {
        let br = alg.base().bracket(&self.x, &self.y)?;
        Ok(alg.base().norm(&br))
    }

    /// `|U(X, Y)|`.
    pub fn u_cross_norm(&self, alg: &RootDecoratedAlgebra) -> Result<f64> {
        let u = u_map(alg.base(), &self.x, &self.y)?;
        Ok(alg.base().norm(&u))
    }
}

const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// `X'_1` and `X'_2` with `C` entries `1/sqrt 2` in columns `a` and `a + 1`,
/// one column on each side of the `W_a`/`W_b` split.
pub fn wa_witness(alg: &RootDecoratedAlgebra, a: usize) -> Result<WitnessPair> {
    let p = match alg.space() {
        Space::SoPq { p, .. } | Space::SuPq { p, .. } | Space::SpPq { p, .. } => p,
        other => return Err(SymmetricError::WrongSpace { expected: "so(p,q), su(p,q) or sp(p,q)", got: other.to_string() }),
    };
    if p < 2 {
        return Err(SymmetricError::InvalidParameters("the witness needs two roots omega_k, so p >= 2".into()));
    }
    let has_column = |c: usize| alg.tags().iter().any(|t| w_column(t) == Some(c));
    if a < 1 || !has_column(a) || !has_column(a + 1) {
        return Err(SymmetricError::InvalidParameters(format!("columns {a} and {} must both exist", a + 1)));
    }
    let (x1, x2) = (format!("W_1.{a}"), format!("W_1.{}", a + 1));
    let (y1, y2) = (format!("W_2.{a}"), format!("W_2.{}", a + 1));
    WitnessPair::from_terms(alg, &[(&x1, H), (&x2, H)], &[(&y1, H), (&y2, H)])
}

/// `X = (A-_{j,j+1} + B-_{j,j+1})/sqrt 2`, `Y = (C-_{j+1,j+2} + D-_{j+1,j+2})/sqrt 2`.
pub fn so_nh_witness(alg: &RootDecoratedAlgebra, j: usize) -> Result<WitnessPair> {
    let Space::SoNH { n } = alg.space() else {
        return Err(SymmetricError::WrongSpace { expected: "so(n,H)", got: alg.space().to_string() });
    };
    if j < 1 || j + 2 > n / 2 {
        return Err(SymmetricError::InvalidParameters(format!("need 1 <= j and j + 2 <= {}", n / 2)));
    }
    let (k, l) = (j + 1, j + 2);
    WitnessPair::from_terms(
        alg,
        &[(&format!("A-_{j}{k}"), H), (&format!("B-_{j}{k}"), H)],
        &[(&format!("C-_{k}{l}"), H), (&format!("D-_{k}{l}"), H)],
    )
}

/// `X = (A_ij + B_ij)/sqrt 2`, `Y = (C_jk + D_jk)/sqrt 2` for `i < j < k`.
pub fn sl_nh_witness(alg: &RootDecoratedAlgebra, i: usize, j: usize, k: usize) -> Result<WitnessPair> {
    let Space::SlNH { n } = alg.space() else {
        return Err(SymmetricError::WrongSpace { expected: "sl(n,H)", got: alg.space().to_string() });
    };
    if !(1 <= i && i < j && j < k && k <= n) {
        return Err(SymmetricError::InvalidParameters(format!("need 1 <= i < j < k <= {n}")));
    }
    WitnessPair::from_terms(
        alg,
        &[(&format!("A_{i}{j}"), H), (&format!("B_{i}{j}"), H)],
        &[(&format!("C_{j}{k}"), H), (&format!("D_{j}{k}"), H)],
    )
}

/// `X = (X_a + JX_a)/sqrt 2`, `Y = (X_b - JX_b)/sqrt 2` for the simple roots
/// `a = omega_1 - omega_2` and `b = omega_2 - omega_3`.
pub fn type_iv_witness(alg: &RootDecoratedAlgebra) -> Result<WitnessPair> {
    let Space::TypeIvSl { n } = alg.space() else {
        return Err(SymmetricError::WrongSpace { expected: "sl(n,C)", got: alg.space().to_string() });
    };
    if n < 3 {
        return Err(SymmetricError::InvalidParameters("rank one has no pair of adjacent simple roots".into()));
    }
    debug_assert!(alg.tags().iter().any(|t| family(t) == "JX"));
    WitnessPair::from_terms(alg, &[("X_12", H), ("JX_12", H)], &[("X_23", H), ("JX_23", -H)])
}
