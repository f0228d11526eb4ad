use nalgebra::DMatrix;
use num_complex::Complex64;
use solvgeom_algebra::{Decoration, MetricLieAlgebra};

use crate::rootalg::{RootDecoratedAlgebra, Space};
use crate::{Result, SymmetricError};

pub(crate) type CMat = DMatrix<Complex64>;

/// Brackets and Gram entries are decomposed to this accuracy.
const CLOSURE_TOL: f64 = 1e-10;
/// Least-squares coefficients below this are roundoff.
const COEFF_ZERO: f64 = 1e-12;

/// A nilradical basis matrix with its root in omega coordinates.
pub(crate) struct RootVector {
    pub tag: String,
    pub matrix: CMat,
    pub root: Vec<i32>,
}

/// `1/4 Re tr((X + X*)(Y + Y*))`.
pub(crate) fn trace_form(x: &CMat, y: &CMat) -> f64 {
    let xs = x + x.adjoint();
    let ys = y + y.adjoint();
    0.25 * (xs * ys).trace().re
}

/// Rescales `x` to trace-form norm squared `kappa`.
pub(crate) fn normalized(x: CMat, kappa: f64) -> CMat {
    let raw = trace_form(&x, &x);
    x * Complex64::new((kappa / raw).sqrt(), 0.0)
}

/// Builds the decorated algebra spanned by `cartan` followed by `roots`.
///
/// `omega[(j, a)]` is the value of the coordinate functional `omega_j` on
/// the `a`-th Cartan matrix. The basis must be orthogonal with a common
/// norm for the trace form; that norm is divided out.
pub(crate) fn assemble(
    space: Space,
    cartan: Vec<(String, CMat)>,
    roots: Vec<RootVector>,
    omega: DMatrix<f64>,
) -> Result<RootDecoratedAlgebra> {
    let p = cartan.len();
    let mut tags: Vec<String> = cartan.iter().map(|(t, _)| t.clone()).collect();
    let mut mats: Vec<CMat> = cartan.into_iter().map(|(_, m)| m).collect();
    let mut root_coeffs = Vec::with_capacity(roots.len());
    for rv in roots {
        tags.push(rv.tag);
        mats.push(rv.matrix);
        root_coeffs.push(rv.root);
    }
    let d = mats.len();

    let kappa = trace_form(&mats[0], &mats[0]);
    let mut ortho = 0.0_f64;
    for i in 0..d {
        for j in i..d {
            let g = trace_form(&mats[i], &mats[j]) / kappa;
            let target = if i == j { 1.0 } else { 0.0 };
            ortho = ortho.max((g - target).abs());
        }
    }
    if ortho > CLOSURE_TOL {
        return Err(SymmetricError::NotOrthonormal { residual: ortho });
    }

    let size = mats[0].len();
    let design = DMatrix::from_fn(2 * size, d, |r, c| {
        let z = mats[c][r % size];
        if r < size {
            z.re
        } else {
            z.im
        }
    });
    let pinv = design.clone().pseudo_inverse(1e-12).map_err(|_| SymmetricError::NotClosed { residual: f64::NAN })?;
    let mut quads = Vec::new();
    let mut residual = 0.0_f64;
    for i in 0..d {
        for j in i + 1..d {
            let br = &mats[i] * &mats[j] - &mats[j] * &mats[i];
            let v = nalgebra::DVector::from_fn(2 * size, |r, _| if r < size { br[r].re } else { br[r - size].im });
            let coeffs = &pinv * &v;
            residual = residual.max((&design * &coeffs - &v).amax() / v.amax().max(1.0));
            for (k, &c) in coeffs.iter().enumerate() {
                if c.abs() > COEFF_ZERO {
                    quads.push((i, j, k, c));
                }
            }
        }
    }
    if residual > CLOSURE_TOL {
        return Err(SymmetricError::NotClosed { residual });
    }

    let values: Vec<Vec<f64>> = root_coeffs
        .iter()
        .map(|r| (0..p).map(|a| r.iter().enumerate().map(|(j, &c)| c as f64 * omega[(j, a)]).sum()).collect())
        .collect();
    let base = MetricLieAlgebra::new(d, quads)?.with_labels(tags)?.with_decoration(Decoration {
        a_indices: (0..p).collect(),
        n_indices: (p..d).collect(),
        roots: values,
    })?;
    RootDecoratedAlgebra::new(base, space, root_coeffs, omega, kappa)
}
