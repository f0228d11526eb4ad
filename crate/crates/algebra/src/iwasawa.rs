use nalgebra::{DMatrix, DVector};

use crate::linalg::{gram_schmidt, rank, sym_eigen_sorted, sym_eigenvalues};
use crate::{AlgebraError, MetricLieAlgebra, Result};

/// Outcome of the three Iwasawa-type conditions.
#[derive(Clone, Debug, PartialEq)]
pub struct IwasawaReport {
    /// `a` is abelian.
    pub cond_i: bool,
    /// Every `ad(A)`, `A` in `a`, is symmetric, and `ad` is injective on `a`.
    pub cond_ii: bool,
    /// Some `A` in `a` has positive-definite `ad(A)` on `n`.
    pub cond_iii: bool,
    /// Coefficients over `a_indices` of an element certifying `cond_iii`.
    pub witness: Option<DVector<f64>>,
    /// Smallest eigenvalue of the symmetric part of `ad(witness)` on `n`.
    pub witness_min_eig: f64,
}

/// Checks whether a decorated algebra is of Iwasawa type.
///
/// Positivity is decided first with the mean-curvature direction (the
/// element `H` of `a` with `<H, X> = tr ad X`), which works for every
/// Einstein example. Failing that, the joint weights of the symmetric parts
/// of `ad(a)` on `n` are computed and the minimum-norm point of their convex
/// hull is found; it certifies positivity exactly when it is nonzero.
pub fn iwasawa_check(alg: &MetricLieAlgebra, tol: f64) -> Result<IwasawaReport> {
    let dec = alg.decoration().ok_or(AlgebraError::DecorationMissing)?;
    let a = &dec.a_indices;
    let n = &dec.n_indices;

    let mut leak = 0.0_f64;
    for &i in n.iter().chain(a) {
        for &j in n {
            let br = alg.bracket(&alg.basis_vector(i), &alg.basis_vector(j))?;
            for &k in a {
                leak = leak.max(br[k].abs());
            }
        }
    }
    if leak > tol {
        return Err(AlgebraError::NotAnIdeal { leak });
    }

    let mut abelian = 0.0_f64;
    for (p, &i) in a.iter().enumerate() {
        for &j in &a[p + 1..] {
            abelian = abelian.max(alg.bracket(&alg.basis_vector(i), &alg.basis_vector(j))?.amax());
        }
    }
    let cond_i = abelian <= tol;

    let ads: Vec<DMatrix<f64>> = a.iter().map(|&i| alg.ad_basis(i)).collect();
    let mut symmetric = true;
    for ad in &ads {
        let adj = alg.metric_adjoint(ad)?;
        if crate::linalg::max_abs(&(adj - ad)) > tol {
            symmetric = false;
        }
    }
    let injective = if ads.is_empty() {
        true
    } else {
        let stacked = DMatrix::from_fn(alg.dim() * alg.dim(), ads.len(), |r, c| ads[c][r]);
        rank(&stacked, tol) == ads.len()
    };
    let cond_ii = symmetric && injective;

    let restricted = restricted_symmetric_parts(alg, &ads, n);
    let mut report = IwasawaReport {
        cond_i,
        cond_ii,
        cond_iii: false,
        witness: None,
        witness_min_eig: f64::NEG_INFINITY,
    };
    if a.is_empty() {
        return Ok(report);
    }
    if n.is_empty() {
        // Positivity on the zero space holds vacuously.
        report.cond_iii = true;
        report.witness = Some(DVector::from_element(a.len(), 1.0));
        report.witness_min_eig = f64::INFINITY;
        return Ok(report);
    }

    let mut candidates = Vec::new();
    let trace: Vec<f64> = (0..alg.dim()).map(|i| alg.ad_basis(i).trace()).collect();
    let h = alg.gram_inv() * DVector::from_vec(trace);
    candidates.push(DVector::from_iterator(a.len(), a.iter().map(|&i| h[i])));
    if let Some(p) = min_norm_weight(&restricted) {
        candidates.push(p);
    }
    for c in candidates {
        if c.amax() == 0.0 {
            continue;
        }
        let c = &c / c.norm();
        let op = combine(&restricted, &c);
        let min = sym_eigenvalues(&op)[0];
        if min > report.witness_min_eig {
            report.witness_min_eig = min;
            report.witness = Some(c);
        }
        if min > tol {
            report.cond_iii = true;
            break;
        }
    }
    Ok(report)
}

/// Symmetric parts of `ad(a_i)` restricted to `n`, written in an orthonormal
/// basis of `n`.
fn restricted_symmetric_parts(alg: &MetricLieAlgebra, ads: &[DMatrix<f64>], n: &[usize]) -> Vec<DMatrix<f64>> {
    let m = n.len();
    if m == 0 {
        return vec![DMatrix::zeros(0, 0); ads.len()];
    }
    let g_n = DMatrix::from_fn(m, m, |r, c| alg.gram()[(n[r], n[c])]);
    let frame = gram_schmidt(&DMatrix::identity(m, m), &g_n, 1e-14).expect("gram is positive definite");
    let frame_inv = frame.clone().try_inverse().expect("frame is invertible");
    ads.iter()
        .map(|ad| {
            let block = DMatrix::from_fn(m, m, |r, c| ad[(n[r], n[c])]);
            let local = &frame_inv * block * &frame;
            (&local + local.transpose()) * 0.5
        })
        .collect()
}

fn combine(parts: &[DMatrix<f64>], coeffs: &DVector<f64>) -> DMatrix<f64> {
    let mut out = DMatrix::zeros(parts[0].nrows(), parts[0].ncols());
    for (p, c) in parts.iter().zip(coeffs.iter()) {
        out += p * *c;
    }
    out
}

/// Minimum-norm point of the convex hull of the joint weights of commuting
/// symmetric operators, by Gilbert's algorithm. Returns `None` when the hull
/// contains the origin (to working precision).
fn min_norm_weight(parts: &[DMatrix<f64>]) -> Option<DVector<f64>> {
    let d = parts.len();
    // A generic combination separates the joint eigenspaces.
    let generic: Vec<f64> = (0..d).map(|i| ((i + 2) as f64).sqrt() + 0.1 * i as f64).collect();
    let (_, vecs) = sym_eigen_sorted(&combine(parts, &DVector::from_vec(generic)));
    let weights: Vec<DVector<f64>> = (0..vecs.ncols())
        .map(|c| {
            let v = vecs.column(c);
            DVector::from_iterator(d, parts.iter().map(|p| (v.transpose() * p * v)[(0, 0)]))
        })
        .collect();
    let mut x = weights[0].clone();
    for _ in 0..20_000 {
        let (best, dot) = weights
            .iter()
            .map(|w| (w, x.dot(w)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("at least one weight");
        let gap = x.norm_squared() - dot;
        if gap <= 1e-14 * x.norm_squared().max(1e-300) {
            break;
        }
        let dir = best - &x;
        let t = (x.dot(&(-&dir)) / dir.norm_squared()).clamp(0.0, 1.0);
        x += dir * t;
    }
    (x.norm() > 1e-9).then_some(x)
}
