use nalgebra::DMatrix;
use solvgeom_algebra::{linalg, tol};

use crate::{from_skew_coords, skew_coords, skew_orthonormalize, CarnotError, Result};

/// A subspace of `so(r)` given by a spanning list of skew matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct UniformSubspaceCandidate {
    pub r: usize,
    pub basis: Vec<DMatrix<f64>>,
}

impl UniformSubspaceCandidate {
    pub fn new(r: usize, basis: Vec<DMatrix<f64>>) -> Result<Self> {
        for (index, m) in basis.iter().enumerate() {
            if m.nrows() != r || m.ncols() != r {
                return Err(CarnotError::Shape { index, rows: m.nrows(), cols: m.ncols(), r });
            }
            let residual = (m + m.transpose()).amax();
            if residual > tol::EXACT * m.amax().max(1.0) {
                return Err(CarnotError::NotSkew { index, residual });
            }
        }
        Ok(Self { r, basis })
    }

    pub fn s(&self) -> usize {
        self.basis.len()
    }

    /// Same subspace with a basis orthonormal for the scaled trace form.
    pub fn orthonormalized(&self) -> Result<Self> {
        Ok(Self { r: self.r, basis: skew_orthonormalize(&self.basis)? })
    }

    /// Coordinates of the basis as columns of a `r(r-1)/2 x s` matrix.
    pub fn coordinate_matrix(&self) -> DMatrix<f64> {
        let d = self.r * (self.r - 1) / 2;
        let mut m = DMatrix::zeros(d, self.s());
        for (c, b) in self.basis.iter().enumerate() {
            m.set_column(c, &skew_coords(b));
        }
        m
    }
}

/// `max |sum a_i^2 + s Id|` over an orthonormal basis of the subspace.
pub fn uniformity_residual(cand: &UniformSubspaceCandidate) -> Result<f64> {
    let on = cand.orthonormalized()?;
    let r = cand.r;
    let sum = on.basis.iter().fold(DMatrix::identity(r, r) * on.s() as f64, |acc, a| acc + a * a);
    Ok(sum.amax())
}

pub fn is_uniform(cand: &UniformSubspaceCandidate, tol: f64) -> Result<bool> {
    Ok(uniformity_residual(cand)? <= tol)
}

/// The orthogonal complement in `so(r)` of a uniform subspace.
pub fn complement_uniform(cand: &UniformSubspaceCandidate, tol: f64) -> Result<UniformSubspaceCandidate> {
    let residual = uniformity_residual(cand)?;
    if residual > tol {
        return Err(CarnotError::NotUniform(residual));
    }
    let r = cand.r;
    let d = r * (r - 1) / 2;
    let basis = if cand.s() == 0 {
        DMatrix::identity(d, d)
    } else {
        let coords = cand.coordinate_matrix().transpose();
        linalg::null_space(&coords, 1e-10).1
    };
    let mats = basis.column_iter().map(|c| from_skew_coords(r, &c.into_owned())).collect();
    UniformSubspaceCandidate::new(r, mats)
}

/// Uniformity test for a subspace of `so(4)` whose orthonormal basis is given
/// by the rows of `coeffs` in `(q, p)` coordinates: the first three columns
/// must be orthogonal to the last three.
pub fn so4_criterion(coeffs: &DMatrix<f64>) -> Result<bool> {
    if coeffs.ncols() != 6 {
        return Err(CarnotError::Shape { index: 0, rows: coeffs.nrows(), cols: coeffs.ncols(), r: 6 });
    }
    let s = coeffs.nrows();
    let rows_residual = (coeffs * coeffs.transpose() - DMatrix::identity(s, s)).amax();
    if rows_residual > 1e-9 {
        return Err(CarnotError::RowsNotOrthonormal(rows_residual));
    }
    let left = coeffs.columns(0, 3);
    let right = coeffs.columns(3, 3);
    Ok((left.transpose() * right).amax() <= 1e-9)
}
