use nalgebra::{DMatrix, DVector};

use crate::{CarnotError, Result};

/// `(a, b) = -tr(ab) / r` on `so(r)`.
pub fn skew_inner(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    let r = a.nrows() as f64;
    // tr(ab) = sum_ij a_ij b_ji
    -a.component_mul(&b.transpose()).sum() / r
}

/// Coordinates of a skew matrix in the basis `sqrt(r/2) (E_ab - E_ba)`,
/// `a < b`, which is orthonormal for [`skew_inner`].
pub fn skew_coords(m: &DMatrix<f64>) -> DVector<f64> {
    let r = m.nrows();
    let scale = (2.0 / r as f64).sqrt();
    let mut out = Vec::with_capacity(r * (r - 1) / 2);
    for a in 0..r {
        for b in a + 1..r {
            out.push(scale * m[(a, b)]);
        }
    }
    DVector::from_vec(out)
}

pub fn from_skew_coords(r: usize, x: &DVector<f64>) -> DMatrix<f64> {
    let scale = (r as f64 / 2.0).sqrt();
    let mut m = DMatrix::zeros(r, r);
    let mut idx = 0;
    for a in 0..r {
        for b in a + 1..r {
            m[(a, b)] = scale * x[idx];
            m[(b, a)] = -scale * x[idx];
            idx += 1;
        }
    }
    m
}

/// Orthonormal basis of `so(r)` for [`skew_inner`].
pub fn skew_basis(r: usize) -> Vec<DMatrix<f64>> {
    let d = r * (r - 1) / 2;
    (0..d)
        .map(|i| {
            let mut x = DVector::zeros(d);
            x[i] = 1.0;
            from_skew_coords(r, &x)
        })
        .collect()
}

/// Gram-Schmidt under [`skew_inner`].
pub fn skew_orthonormalize(mats: &[DMatrix<f64>]) -> Result<Vec<DMatrix<f64>>> {
    let Some(first) = mats.first() else {
        return Ok(Vec::new());
    };
    let r = first.nrows();
    let cols: Vec<_> = mats.iter().map(skew_coords).collect();
    let m = DMatrix::from_columns(&cols);
    let d = m.nrows();
    let q = solvgeom_algebra::linalg::gram_schmidt(&m, &DMatrix::identity(d, d), 1e-10).ok_or(CarnotError::Dependent)?;
    Ok(q.column_iter().map(|c| from_skew_coords(r, &c.into_owned())).collect())
}
