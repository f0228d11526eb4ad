use nalgebra::{DMatrix, DVector};
use solvgeom_algebra::linalg;
use solvgeom_carnot::{from_skew_coords, skew_basis, skew_coords};

use crate::{FamilyPoint, Result, So6Error};

fn commutator(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b - b * a
}

/// Orthonormal basis (columns) of the span of `vs`, dropping directions whose
/// singular value is below `1e-10` times the largest (or below `1e-12`).
fn orthonormal_span(vs: &[DVector<f64>]) -> DMatrix<f64> {
    let m = DMatrix::from_columns(vs);
    let svd = m.svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let largest = svd.singular_values.max();
    let keep: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] > 1e-10 * largest && svd.singular_values[i] > 1e-12)
        .collect();
    DMatrix::from_fn(u.nrows(), keep.len(), |r, c| u[(r, keep[c])])
}

/// Cosine of the smallest principal angle between two subspaces given by
/// orthonormal columns.
fn principal_cos(p: &DMatrix<f64>, q: &DMatrix<f64>) -> f64 {
    (p.transpose() * q).singular_values().max().min(1.0)
}

fn w_frame(point: &FamilyPoint) -> DMatrix<f64> {
    DMatrix::from_columns(&point.d.iter().map(skew_coords).collect::<Vec<_>>())
}

/// Basis of `{X in so(6) : [X, D_i] = 0 for all i}`, orthonormal for the
/// scaled trace form.
pub fn centralizer_in_so6(point: &FamilyPoint) -> Vec<DMatrix<f64>> {
    let basis = skew_basis(6);
    let d = basis.len();
    let mut stacked = DMatrix::zeros(3 * d, d);
    for (c, x) in basis.iter().enumerate() {
        for (i, di) in point.d.iter().enumerate() {
            stacked.view_mut((i * d, c), (d, 1)).copy_from(&skew_coords(&commutator(x, di)));
        }
    }
    let (_, null) = linalg::null_space(&stacked, 1e-10);
    null.column_iter().map(|c| from_skew_coords(6, &c.into_owned())).collect()
}

/// Cosine of the angle between `W` and its centralizer.
pub fn angle_to_centralizer(point: &FamilyPoint) -> f64 {
    let cent: Vec<_> = centralizer_in_so6(point).iter().map(skew_coords).collect();
    principal_cos(&w_frame(point), &DMatrix::from_columns(&cent))
}

/// Cosine of the minimal angle between `W` and `[W, W]`, computed from
/// principal angles.
pub fn bracket_angle(point: &FamilyPoint) -> Result<f64> {
    let d = &point.d;
    let brackets = [commutator(&d[0], &d[1]), commutator(&d[2], &d[0]), commutator(&d[1], &d[2])];
    if brackets.iter().all(|b| b.amax() <= 1e-12) {
        return Err(So6Error::BracketVanishes);
    }
    let span = orthonormal_span(&brackets.iter().map(skew_coords).collect::<Vec<_>>());
    Ok(principal_cos(&w_frame(point), &span))
}

/// The printed closed form
/// `|r| sqrt((r^2 + s^2) / (r^2 + s^2 + 4t^2 - 2|t^2 + sqrt(2) st|))`.
pub fn bracket_angle_closed_form(r: f64, s: f64, t: f64) -> f64 {
    let (r, s, t) = normalized(r, s, t);
    let k = t * t + 2f64.sqrt() * s * t;
    ratio(r, s, r * r + s * s + 4.0 * t * t - 2.0 * k.abs())
}

/// The closed form with the maximization over `xy + yz + zx in [-1/2, 1]`
/// carried out on both signs of `k = t^2 + sqrt(2) st`: for `k < 0` the
/// denominator is `r^2 + s^2 + 4t^2 + 4k`.
pub fn bracket_angle_corrected(r: f64, s: f64, t: f64) -> f64 {
    let (r, s, t) = normalized(r, s, t);
    let k = t * t + 2f64.sqrt() * s * t;
    let den = if k >= 0.0 { r * r + s * s + 4.0 * t * t - 2.0 * k } else { r * r + s * s + 4.0 * t * t + 4.0 * k };
    ratio(r, s, den)
}

fn ratio(r: f64, s: f64, den: f64) -> f64 {
    if r == 0.0 || den <= 0.0 {
        return 0.0;
    }
    (r.abs() * ((r * r + s * s) / den).sqrt()).min(1.0)
}

fn normalized(r: f64, s: f64, t: f64) -> (f64, f64, f64) {
    let n = (r * r + s * s + t * t).sqrt();
    (r / n, s / n, t / n)
}
