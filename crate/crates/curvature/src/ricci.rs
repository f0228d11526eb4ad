use nalgebra::{DMatrix, DVector};
use solvgeom_algebra::{AlgebraError, Decoration, MetricLieAlgebra};

use crate::{CurvatureError, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EinsteinVerdict {
    pub is_einstein: bool,
    /// Einstein constant `lambda` in `Ric = lambda g` (best fit by trace).
    pub lambda: f64,
    /// `max|Ric - lambda G| / max|Ric|`, or 0 when `Ric` vanishes.
    pub residual: f64,
}

/// `U(x, y)` in basis coordinates.
pub fn u_map(alg: &MetricLieAlgebra, x: &DVector<f64>, y: &DVector<f64>) -> Result<DVector<f64>> {
    let ad_x = alg.ad_matrix(x)?;
    let ad_y = alg.ad_matrix(y)?;
    // <[e_k, x], y> = -<ad(x) e_k, y>, so the covector is -(ad_x^T G y + ad_y^T G x) / 2.
    let g = alg.gram();
    let w = -(ad_x.transpose() * (g * y) + ad_y.transpose() * (g * x)) * 0.5;
    Ok(alg.gram_inv() * w)
}

/// `H = sum_i U(X_i, X_i)` over the cached orthonormal frame.
pub fn mean_curvature(alg: &MetricLieAlgebra) -> DVector<f64> {
    let frame = alg.frame();
    let mut h = DVector::zeros(alg.dim());
    for a in 0..alg.dim() {
        let f = frame.column(a).into_owned();
        h += u_map(alg, &f, &f).expect("frame vectors have the algebra's dimension");
    }
    h
}

/// Matrices `ad(f_a)` written in the orthonormal frame `f_a`.
fn frame_ads(alg: &MetricLieAlgebra) -> Vec<DMatrix<f64>> {
    let frame = alg.frame();
    let frame_inv = alg.frame_inv();
    (0..alg.dim())
        .map(|a| {
            let ad = alg.ad_matrix(&frame.column(a).into_owned()).expect("frame column length");
            frame_inv * ad * frame
        })
        .collect()
}

/// The Ricci form as a symmetric matrix in the algebra's own basis.
pub fn ricci(alg: &MetricLieAlgebra) -> DMatrix<f64> {
    let n = alg.dim();
    let ads = frame_ads(alg);
    let h: Vec<f64> = ads.iter().map(|ad| ad.trace()).collect();
    let mut ad_h = DMatrix::zeros(n, n);
    for (ad, &c) in ads.iter().zip(&h) {
        ad_h += ad * c;
    }
    let mut structure_term = DMatrix::zeros(n, n);
    for ad in &ads {
        structure_term += ad * ad.transpose();
    }
    let mut ric = DMatrix::zeros(n, n);
    for a in 0..n {
        for b in a..n {
            let adjoint_term = ads[a].component_mul(&ads[b]).sum();
            let killing = ads[a].component_mul(&ads[b].transpose()).sum();
            let mean_term = 0.5 * (ad_h[(b, a)] + ad_h[(a, b)]);
            let v = -0.5 * adjoint_term - 0.5 * killing + 0.25 * structure_term[(a, b)] - mean_term;
            ric[(a, b)] = v;
            ric[(b, a)] = v;
        }
    }
    let finv = alg.frame_inv();
    finv.transpose() * ric * finv
}

pub fn einstein_verdict(alg: &MetricLieAlgebra, tol: f64) -> EinsteinVerdict {
    verdict_from_ricci(alg, &ricci(alg), tol)
}

pub(crate) fn verdict_from_ricci(alg: &MetricLieAlgebra, ric: &DMatrix<f64>, tol: f64) -> EinsteinVerdict {
    let n = alg.dim() as f64;
    let lambda = (alg.gram_inv() * ric).trace() / n;
    let scale = ric.amax();
    if scale == 0.0 {
        return EinsteinVerdict { is_einstein: true, lambda: 0.0, residual: 0.0 };
    }
    let residual = (ric - alg.gram() * lambda).amax() / scale;
    EinsteinVerdict { is_einstein: residual <= tol, lambda, residual }
}

/// Sectional curvature of the plane spanned by `x` and `y`.
pub fn sectional(alg: &MetricLieAlgebra, x: &DVector<f64>, y: &DVector<f64>) -> Result<f64> {
    if x.len() != alg.dim() || y.len() != alg.dim() {
        return Err(AlgebraError::DimensionMismatch { expected: alg.dim(), got: x.len().min(y.len()) }.into());
    }
    let nx = alg.norm(x);
    if !(nx > 0.0) {
        return Err(CurvatureError::Degenerate);
    }
    let xu = x / nx;
    let yp = y - &xu * alg.inner(y, &xu);
    let ny = alg.norm(&yp);
    if !(ny > 1e-12 * alg.norm(y)) || ny == 0.0 {
        return Err(CurvatureError::Degenerate);
    }
    let yu = yp / ny;
    Ok(sectional_orthonormal(alg, &xu, &yu))
}

fn sectional_orthonormal(alg: &MetricLieAlgebra, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
    let br = |a: &DVector<f64>, b: &DVector<f64>| alg.bracket(a, b).expect("checked lengths");
    let u = |a: &DVector<f64>, b: &DVector<f64>| u_map(alg, a, b).expect("checked lengths");
    let xy = br(x, y);
    let uxy = u(x, y);
    -0.75 * alg.inner(&xy, &xy) - 0.5 * alg.inner(&br(x, &xy), y) - 0.5 * alg.inner(&br(y, &-&xy), x)
        + alg.inner(&uxy, &uxy)
        - alg.inner(&u(x, x), &u(y, y))
}

/// The subalgebra spanned by `H/|H|` and the nilradical, with the induced
/// inner product.
pub fn rank_one_reduction(alg: &MetricLieAlgebra) -> Result<MetricLieAlgebra> {
    let dec = alg.decoration().ok_or(AlgebraError::DecorationMissing)?;
    let h = mean_curvature(alg);
    let norm = alg.norm(&h);
    if !(norm > 1e-12) {
        return Err(CurvatureError::ZeroMeanCurvature);
    }
    let hu = h / norm;
    let mut cols = vec![hu.clone()];
    cols.extend(dec.n_indices.iter().map(|&i| alg.basis_vector(i)));
    let sub = alg.subalgebra(&DMatrix::from_columns(&cols), 1e-9)?;
    let ad = alg.ad_matrix(&hu)?;
    let roots = dec.n_indices.iter().map(|&i| vec![ad[(i, i)]]).collect();
    let mut labels = vec!["H".to_string()];
    labels.extend(dec.n_indices.iter().map(|&i| alg.labels()[i].clone()));
    let m = dec.n_indices.len();
    Ok(sub.with_labels(labels)?.with_decoration(Decoration {
        a_indices: vec![0],
        n_indices: (1..=m).collect(),
        roots,
    })?)
}
