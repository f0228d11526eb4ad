use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{from_skew_coords, skew_inner, CarnotError, Result, UniformSubspaceCandidate};

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub trials: usize,
    pub seed: u64,
    /// Iteration cap for each local descent.
    pub max_iter: usize,
    /// A restart counts as a candidate when its residual is at most this.
    pub tol_opt: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { trials: 200, seed: 0xE1_5731, max_iter: 4000, tol_opt: solvgeom_algebra::tol::OPT }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Converged subspaces with their residuals, best first.
    pub candidates: Vec<(UniformSubspaceCandidate, f64)>,
    /// Smallest `sqrt(cond_i^2 + cond_ii^2)` over all restarts.
    pub best_residual: f64,
    /// Final residual of every restart, in trial order.
    pub trial_residuals: Vec<f64>,
}

pub fn search_uniform(r: usize, s: usize, opts: &SearchOptions) -> Result<SearchResult> {
    let d = r * r.saturating_sub(1) / 2;
    if r < 2 || s == 0 || s > d {
        return Err(CarnotError::InvalidSearch(format!("need r >= 2 and 1 <= s <= {d}, got r={r}, s={s}")));
    }
    if opts.trials == 0 {
        return Err(CarnotError::InvalidSearch("trials must be positive".into()));
    }
    let runs: Vec<(DMatrix<f64>, f64)> = (0..opts.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(trial as u64);
            let start = DMatrix::from_fn(d, s, |_, _| rng.random_range(-1.0..1.0));
            let frame = descend(r, retract(&start), opts.max_iter);
            let residual = frame_residual(r, &frame);
            (frame, residual)
        })
        .collect();
    let trial_residuals: Vec<f64> = runs.iter().map(|x| x.1).collect();
    let best_residual = trial_residuals.iter().copied().fold(f64::INFINITY, f64::min);
    let mut kept: Vec<(DMatrix<f64>, f64)> = runs.into_iter().filter(|x| x.1 <= opts.tol_opt).collect();
    kept.sort_by(|a, b| {
        a.1.total_cmp(&b.1).then_with(|| {
            a.0.iter()
                .zip(b.0.iter())
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    let candidates = kept
        .into_iter()
        .map(|(frame, res)| {
            let basis = frame.column_iter().map(|c| from_skew_coords(r, &c.into_owned())).collect();
            (UniformSubspaceCandidate { r, basis }, res)
        })
        .collect();
    Ok(SearchResult { candidates, best_residual, trial_residuals })
}

/// `sqrt(cond_i^2 + cond_ii^2)` for the frame's matrices, with max-entry norms.
fn frame_residual(r: usize, frame: &DMatrix<f64>) -> f64 {
    let mats: Vec<_> = frame.column_iter().map(|c| from_skew_coords(r, &c.into_owned())).collect();
    let s = mats.len();
    let mut cond_i = 0.0_f64;
    for a in 0..s {
        for b in 0..s {
            let delta = if a == b { 1.0 } else { 0.0 };
            cond_i = cond_i.max((skew_inner(&mats[a], &mats[b]) - delta).abs());
        }
    }
    let sum = mats.iter().fold(DMatrix::identity(r, r) * s as f64, |acc, m| acc + m * m);
    cond_i.hypot(sum.amax())
}

/// `f = |sum a_i^2 + s Id|_F^2` and its Euclidean gradient in frame coordinates.
fn objective(r: usize, frame: &DMatrix<f64>) -> (f64, DMatrix<f64>) {
    let s = frame.ncols();
    let mats: Vec<_> = frame.column_iter().map(|c| from_skew_coords(r, &c.into_owned())).collect();
    let m = mats.iter().fold(DMatrix::identity(r, r) * s as f64, |acc, a| acc + a * a);
    let f = m.norm_squared();
    let scale = 2.0 * (r as f64 / 2.0).sqrt();
    let mut grad = DMatrix::zeros(frame.nrows(), s);
    for (i, a) in mats.iter().enumerate() {
        let g = -(&m * a + a * &m) * 2.0;
        let mut idx = 0;
        for p in 0..r {
            for q in p + 1..r {
                grad[(idx, i)] = scale * g[(p, q)];
                idx += 1;
            }
        }
    }
    (f, grad)
}

/// Q factor of a thin QR with a positive diagonal in R.
fn retract(x: &DMatrix<f64>) -> DMatrix<f64> {
    let qr = x.clone().qr();
    let mut q = qr.q();
    let rmat = qr.r();
    for c in 0..q.ncols() {
        if rmat[(c, c)] < 0.0 {
            q.column_mut(c).neg_mut();
        }
    }
    q
}

fn riemannian_gradient(x: &DMatrix<f64>, egrad: &DMatrix<f64>) -> DMatrix<f64> {
    let xe = x.transpose() * egrad;
    let sym = (&xe + xe.transpose()) * 0.5;
    egrad - x * sym
}

/// Barzilai-Borwein gradient descent on the Stiefel manifold with Armijo
/// backtracking.
fn descend(r: usize, mut x: DMatrix<f64>, max_iter: usize) -> DMatrix<f64> {
    let (mut f, eg) = objective(r, &x);
    let mut g = riemannian_gradient(&x, &eg);
    let mut step = 0.05;
    for _ in 0..max_iter {
        let gnorm2 = g.norm_squared();
        if f < 1e-28 || gnorm2 < 1e-30 {
            break;
        }
        let mut t = step;
        let mut accepted = None;
        for _ in 0..50 {
            let candidate = retract(&(&x - &g * t));
            let (fc, egc) = objective(r, &candidate);
            if fc <= f - 1e-4 * t * gnorm2 {
                accepted = Some((candidate, fc, egc));
                break;
            }
            t *= 0.5;
        }
        let Some((xn, fn_, egn)) = accepted else { break };
        let gn = riemannian_gradient(&xn, &egn);
        let dx = &xn - &x;
        let dg = &gn - &g;
        let curvature = dx.dot(&dg).abs();
        step = if curvature > 0.0 { (dx.norm_squared() / curvature).clamp(1e-6, 10.0) } else { t * 2.0 };
        x = xn;
        f = fn_;
        g = gn;
    }
    x
}
