//! `R^4` as the quaternions with basis `1, i, j, k`; `so(4) = P + P` acting by
//! `L(q) + R(p)` for imaginary `q`, `p`.

use nalgebra::{DMatrix, Quaternion};

fn multiplication_matrix(q: [f64; 4], left: bool) -> DMatrix<f64> {
    let q = Quaternion::new(q[0], q[1], q[2], q[3]);
    let mut m = DMatrix::zeros(4, 4);
    for c in 0..4 {
        let mut e = [0.0; 4];
        e[c] = 1.0;
        let x = Quaternion::new(e[0], e[1], e[2], e[3]);
        let y = if left { q * x } else { x * q };
        for (r, v) in [y.w, y.i, y.j, y.k].into_iter().enumerate() {
            m[(r, c)] = v;
        }
    }
    m
}

/// Left multiplication by `q = (w, x, y, z)`.
pub fn left_mult(q: [f64; 4]) -> DMatrix<f64> {
    multiplication_matrix(q, true)
}

/// Right multiplication by `p = (w, x, y, z)`.
pub fn right_mult(p: [f64; 4]) -> DMatrix<f64> {
    multiplication_matrix(p, false)
}

/// `L(q) + R(p)` for `q, p` given by their `i, j, k` coefficients. The map
/// from `R^6` is an isometry onto `so(4)` with its scaled trace form.
pub fn pair_to_so4(row: &[f64]) -> DMatrix<f64> {
    left_mult([0.0, row[0], row[1], row[2]]) + right_mult([0.0, row[3], row[4], row[5]])
}
