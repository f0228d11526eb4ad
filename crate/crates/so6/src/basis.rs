use nalgebra::DMatrix;
use solvgeom_algebra::{tol, MetricLieAlgebra};
use solvgeom_carnot::{build_solvmanifold, DataTriple};

use crate::{Result, So6Error};

/// `tau(X + iY) = [[X, Y], [-Y, X]]` for `X` skew and `Y` symmetric 3x3.
pub fn tau(x: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    if x.shape() != (3, 3) || y.shape() != (3, 3) {
        return Err(So6Error::Shape);
    }
    if (x + x.transpose()).amax() > tol::EXACT * x.amax().max(1.0) {
        return Err(So6Error::NotSkew);
    }
    if (y - y.transpose()).amax() > tol::EXACT * y.amax().max(1.0) {
        return Err(So6Error::NotSymmetric);
    }
    let mut m = DMatrix::zeros(6, 6);
    m.view_mut((0, 0), (3, 3)).copy_from(x);
    m.view_mut((3, 3), (3, 3)).copy_from(x);
    m.view_mut((0, 3), (3, 3)).copy_from(y);
    m.view_mut((3, 0), (3, 3)).copy_from(&-y);
    Ok(m)
}

#[derive(Clone, Debug, PartialEq)]
pub struct AbcBasis {
    pub a: [DMatrix<f64>; 3],
    pub b: [DMatrix<f64>; 3],
    pub c: [DMatrix<f64>; 3],
}

/// Pairs `(X_i, Y_i)`: `X_i` has `-sqrt(3/2)` at `(j, k)` and `+sqrt(3/2)` at
/// `(k, j)`, where `j < k` are the two indices other than `i`; `Y_i = |X_i|`.
fn generators() -> [(DMatrix<f64>, DMatrix<f64>); 3] {
    let c = 1.5f64.sqrt();
    let pattern = |p: usize, q: usize| {
        // -1 at (p, q), +1 at (q, p), p < q
        let mut x = DMatrix::zeros(3, 3);
        x[(p, q)] = -c;
        x[(q, p)] = c;
        let y = x.abs();
        (x, y)
    };
    [pattern(1, 2), pattern(0, 2), pattern(0, 1)]
}

pub fn basis_abc() -> AbcBasis {
    let zero = DMatrix::zeros(3, 3);
    let gens = generators();
    let a = gens.clone().map(|(x, _)| tau(&x, &zero).expect("skew generator"));
    let b = gens.map(|(_, y)| tau(&zero, &y).expect("symmetric generator"));
    let c = [0, 1, 2].map(|i| {
        let mut d = DMatrix::zeros(3, 3);
        d[(i, i)] = 3f64.sqrt();
        tau(&zero, &d).expect("diagonal is symmetric")
    });
    AbcBasis { a, b, c }
}

/// Signs applied to `B_i` and `C_i`; all `+1` gives the main family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignMask {
    pub b: [f64; 3],
    pub c: [f64; 3],
}

impl Default for SignMask {
    fn default() -> Self {
        Self { b: [1.0; 3], c: [1.0; 3] }
    }
}

impl SignMask {
    /// Bits 0..3 negate `B_1..B_3`, bits 3..6 negate `C_1..C_3`.
    pub fn from_bits(bits: u8) -> Self {
        let sign = |k: u8| if bits >> k & 1 == 1 { -1.0 } else { 1.0 };
        Self { b: [sign(0), sign(1), sign(2)], c: [sign(3), sign(4), sign(5)] }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyPoint {
    pub r: f64,
    pub s: f64,
    pub t: f64,
    pub signs: SignMask,
    pub d: [DMatrix<f64>; 3],
}

impl FamilyPoint {
    pub fn new(r: f64, s: f64, t: f64, signs: SignMask) -> Result<Self> {
        let norm = (r * r + s * s + t * t).sqrt();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(So6Error::ZeroVector);
        }
        let (r, s, t) = (r / norm, s / norm, t / norm);
        let basis = basis_abc();
        let d = [0, 1, 2].map(|i| &basis.a[i] * r + &basis.b[i] * (s * signs.b[i]) + &basis.c[i] * (t * signs.c[i]));
        Ok(Self { r, s, t, signs, d })
    }

    pub fn triple(&self) -> DataTriple {
        DataTriple::new(6, self.d.to_vec()).expect("D_i are skew 6x6")
    }

    /// The 10-dimensional Einstein solvmanifold of this subspace.
    pub fn solvmanifold(&self) -> MetricLieAlgebra {
        build_solvmanifold(&self.triple())
    }
}

/// `W(r, s, t)` with the default signs; the input is normalized.
pub fn w_of(r: f64, s: f64, t: f64) -> Result<FamilyPoint> {
    FamilyPoint::new(r, s, t, SignMask::default())
}
