use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use solvgeom_curvature::sectional;

use crate::FamilyPoint;

/// `j(Z) = sum_k Z_k D_k`.
fn j_of(point: &FamilyPoint, z: &DVector<f64>) -> DMatrix<f64> {
    (0..3).fold(DMatrix::zeros(6, 6), |acc, k| acc + &point.d[k] * z[k])
}

/// `(|X|^2/2 + |Z|^2)(|Y|^2/2 + |W|^2) + <j(Z)X, j(W)Y> - |j(Z)Y + j(W)X|^2 / 4`
/// for `X, Y` in `v = R^6` and `Z, W` in `z = R^3`. Positive values certify
/// the curvature inequality for that tuple.
pub fn inequality_margin(
    point: &FamilyPoint,
    x: &DVector<f64>,
    y: &DVector<f64>,
    z: &DVector<f64>,
    w: &DVector<f64>,
) -> f64 {
    let jz = j_of(point, z);
    let jw = j_of(point, w);
    let lhs = (0.5 * x.norm_squared() + z.norm_squared()) * (0.5 * y.norm_squared() + w.norm_squared());
    let cross = (&jz * x).dot(&(&jw * y));
    let mixed = &jz * y + &jw * x;
    lhs + cross - 0.25 * mixed.norm_squared()
}

/// Margin for the plane spanned by `p, q` in the nilradical `v + z = R^9`:
/// the basis is made orthonormal and then rotated so that the `v` parts are
/// orthogonal before applying [`inequality_margin`].
pub fn plane_margin(point: &FamilyPoint, p: &DVector<f64>, q: &DVector<f64>) -> f64 {
    let p = p / p.norm();
    let q = q - &p * q.dot(&p);
    let q = &q / q.norm();
    let (x, y) = (p.rows(0, 6).into_owned(), q.rows(0, 6).into_owned());
    let phi = 0.5 * (2.0 * x.dot(&y)).atan2(x.norm_squared() - y.norm_squared());
    let (c, s) = (phi.cos(), phi.sin());
    let p2 = &p * c + &q * s;
    let q2 = &q * c - &p * s;
    inequality_margin(
        point,
        &p2.rows(0, 6).into_owned(),
        &q2.rows(0, 6).into_owned(),
        &p2.rows(6, 3).into_owned(),
        &q2.rows(6, 3).into_owned(),
    )
}

#[derive(Clone, Debug)]
pub struct MarginOptions {
    pub n_random: usize,
    pub n_descent: usize,
    pub max_iter: usize,
    pub seed: u64,
}

impl Default for MarginOptions {
    fn default() -> Self {
        Self { n_random: 10_000, n_descent: 100, max_iter: 300, seed: 0xE1_5731 }
    }
}

/// Sampling evidence for negative curvature. Not a proof.
#[derive(Clone, Debug)]
pub struct MarginReport {
    pub min_margin: f64,
    pub min_margin_random: f64,
    pub min_margin_descent: f64,
    /// Extremes of sectional curvature over `n_random` random planes in `s`.
    pub min_sectional: f64,
    pub max_sectional: f64,
}

impl MarginReport {
    pub fn negatively_curved(&self) -> bool {
        self.min_margin > 0.0 && self.max_sectional < 0.0
    }
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> DVector<f64> {
    DVector::from_fn(n, |_, _| rng.random_range(-1.0..1.0))
}

fn pair_margin(point: &FamilyPoint, frame: &DVector<f64>) -> f64 {
    plane_margin(point, &frame.rows(0, 9).into_owned(), &frame.rows(9, 9).into_owned())
}

/// Local minimization of the plane margin from a random start, using
/// central-difference gradients and backtracking steps in `R^9 x R^9`,
/// renormalizing to an orthonormal pair after each step.
fn descend(point: &FamilyPoint, rng: &mut ChaCha8Rng, max_iter: usize) -> f64 {
    let mut x = random_vec(rng, 18);
    let orthonormalize = |v: &DVector<f64>| {
        let p = v.rows(0, 9).normalize();
        let q = v.rows(9, 9) - &p * v.rows(9, 9).dot(&p);
        let q = q.normalize();
        let mut out = DVector::zeros(18);
        out.rows_mut(0, 9).copy_from(&p);
        out.rows_mut(9, 9).copy_from(&q);
        out
    };
    x = orthonormalize(&x);
    let mut f = pair_margin(point, &x);
    let mut step = 0.1;
    let h = 1e-6;
    for _ in 0..max_iter {
        let grad = DVector::from_fn(18, |i, _| {
            let mut a = x.clone();
            let mut b = x.clone();
            a[i] += h;
            b[i] -= h;
            (pair_margin(point, &a) - pair_margin(point, &b)) / (2.0 * h)
        });
        let g2 = grad.norm_squared();
        if g2 < 1e-20 {
            break;
        }
        let mut accepted = false;
        for _ in 0..30 {
            let cand = orthonormalize(&(&x - &grad * step));
            let fc = pair_margin(point, &cand);
            if fc <= f - 1e-4 * step * g2 {
                x = cand;
                f = fc;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
        step *= 2.0;
    }
    f
}

pub fn negative_curvature_margin(point: &FamilyPoint, opts: &MarginOptions) -> MarginReport {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut min_random = f64::INFINITY;
    for _ in 0..opts.n_random {
        let p = random_vec(&mut rng, 9);
        let q = random_vec(&mut rng, 9);
        min_random = min_random.min(plane_margin(point, &p, &q));
    }
    let min_descent = (0..opts.n_descent)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(1 + k as u64);
            descend(point, &mut rng, opts.max_iter)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    let (min_sectional, max_sectional) = sectional_range(point, opts.n_random, opts.seed ^ 0x5EC7);
    MarginReport {
        min_margin: min_random.min(min_descent),
        min_margin_random: min_random,
        min_margin_descent: min_descent,
        min_sectional,
        max_sectional,
    }
}

/// Extremes of sectional curvature over `n` random planes of the
/// solvmanifold.
pub(crate) fn sectional_range(point: &FamilyPoint, n: usize, seed: u64) -> (f64, f64) {
    let alg = point.solvmanifold();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for _ in 0..n {
        let x = random_vec(&mut rng, alg.dim());
        let y = random_vec(&mut rng, alg.dim());
        if let Ok(k) = sectional(&alg, &x, &y) {
            lo = lo.min(k);
            hi = hi.max(k);
        }
    }
    (lo, hi)
}
