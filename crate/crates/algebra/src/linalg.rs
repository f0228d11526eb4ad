//! Small dense linear-algebra helpers on top of `nalgebra`.

use nalgebra::{DMatrix, DVector, SymmetricEigen, SVD};

/// Orthonormalizes the columns of `vectors` with respect to `gram` by modified
/// Gram-Schmidt. Returns `None` if a column is dependent on the previous ones
/// (its residual norm falls below `tol` times its original norm).
pub fn gram_schmidt(vectors: &DMatrix<f64>, gram: &DMatrix<f64>, tol: f64) -> Option<DMatrix<f64>> {
    let mut out = vectors.clone();
    for a in 0..out.ncols() {
        let original = inner(&out.column(a).into_owned(), &out.column(a).into_owned(), gram).sqrt();
        let mut v = out.column(a).into_owned();
        for b in 0..a {
            let f = out.column(b).into_owned();
            let proj = inner(&v, &f, gram);
            v -= f * proj;
        }
        // Second pass for numerical stability.
        for b in 0..a {
            let f = out.column(b).into_owned();
            let proj = inner(&v, &f, gram);
            v -= f * proj;
        }
        let norm = inner(&v, &v, gram).max(0.0).sqrt();
        if !(norm > tol * original.max(f64::MIN_POSITIVE)) {
            return None;
        }
        out.set_column(a, &(v / norm));
    }
    Some(out)
}

pub fn inner(x: &DVector<f64>, y: &DVector<f64>, gram: &DMatrix<f64>) -> f64 {
    (x.transpose() * gram * y)[(0, 0)]
}

/// Eigenvalues of a symmetric matrix in ascending order.
pub fn sym_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let sym = (m + m.transpose()) * 0.5;
    let mut ev: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Eigen-decomposition of a symmetric matrix with eigenpairs sorted by
/// ascending eigenvalue.
pub fn sym_eigen_sorted(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let sym = (m + m.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(m.nrows(), order.len(), |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Singular values and a basis of the null space of `m` (as columns).
///
/// A singular value counts as zero when it is at most `tol` times the largest
/// one (or at most `tol` outright when `m` vanishes).
pub fn null_space(m: &DMatrix<f64>, tol: f64) -> (Vec<f64>, DMatrix<f64>) {
    let cols = m.ncols();
    // Pad with zero rows so the thin SVD carries a full right basis.
    let padded = if m.nrows() < cols {
        let mut p = DMatrix::zeros(cols, cols);
        p.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = SVD::new(padded, false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut pairs: Vec<(f64, usize)> = svd.singular_values.iter().copied().zip(0..).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let largest = pairs.last().map_or(0.0, |p| p.0);
    let cutoff = if largest > 0.0 { tol * largest.max(1.0) } else { tol };
    let null: Vec<usize> = pairs.iter().filter(|p| p.0 <= cutoff).map(|p| p.1).collect();
    let basis = DMatrix::from_fn(cols, null.len(), |r, c| v_t[(null[c], r)]);
    (pairs.iter().map(|p| p.0).collect(), basis)
}

/// Numerical rank of `m` with the same cutoff rule as [`null_space`].
pub fn rank(m: &DMatrix<f64>, tol: f64) -> usize {
    let (_, null) = null_space(m, tol);
    m.ncols() - null.ncols()
}

/// Largest absolute entry.
pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
}
