use nalgebra::DMatrix;
use solvgeom_algebra::linalg;

use crate::{
    complement_uniform, search_uniform, skew_basis, skew_coords, Result, SearchOptions, UniformSubspaceCandidate,
};

/// Tolerance for treating two fingerprints as equal.
const CLUSTER_TOL: f64 = 1e-6;

fn round8(x: f64) -> f64 {
    (x * 1e8).round() / 1e8 + 0.0
}

/// Conjugation invariants of a subspace of `so(r)`: the sorted spectrum of
/// `sum a_i^2`, the sorted spectrum of `sum_{i<j} [a_i,a_j]^T [a_i,a_j]`, and
/// the dimension of the centralizer in `so(r)`, each rounded to 8 digits.
/// Equal fingerprints are necessary for equivalence, not sufficient.
pub fn equivalence_invariants(cand: &UniformSubspaceCandidate) -> Result<Vec<f64>> {
    let on = cand.orthonormalized()?;
    let r = cand.r;
    let squares = on.basis.iter().fold(DMatrix::zeros(r, r), |acc, a| acc + a * a);
    let mut commutators = DMatrix::zeros(r, r);
    for i in 0..on.s() {
        for j in i + 1..on.s() {
            let c = &on.basis[i] * &on.basis[j] - &on.basis[j] * &on.basis[i];
            commutators += c.transpose() * &c;
        }
    }
    let mut out: Vec<f64> = linalg::sym_eigenvalues(&squares).into_iter().map(round8).collect();
    out.extend(linalg::sym_eigenvalues(&commutators).into_iter().map(round8));
    out.push(centralizer_dim(&on) as f64);
    Ok(out)
}

fn centralizer_dim(cand: &UniformSubspaceCandidate) -> usize {
    let basis = skew_basis(cand.r);
    let d = basis.len();
    if cand.s() == 0 {
        return d;
    }
    let mut stacked = DMatrix::zeros(d * cand.s(), d);
    for (c, x) in basis.iter().enumerate() {
        for (i, a) in cand.basis.iter().enumerate() {
            let coords = skew_coords(&(x * a - a * x));
            stacked.view_mut((i * d, c), (d, 1)).copy_from(&coords);
        }
    }
    linalg::null_space(&stacked, 1e-9).1.ncols()
}

pub fn fingerprints_match(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// Uniform subspaces of `so(4)` of one dimension, grouped by fingerprint.
#[derive(Clone, Debug)]
pub struct So4Class {
    pub s: usize,
    pub representatives: Vec<UniformSubspaceCandidate>,
    pub fingerprints: Vec<Vec<f64>>,
    /// Whether the classes come from complements of the `6 - s` classes
    /// rather than from a search.
    pub by_duality: bool,
    /// Best residual of the search, when one was run.
    pub best_residual: Option<f64>,
}

impl So4Class {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

#[derive(Clone, Debug)]
pub struct So4Classification {
    pub classes: Vec<So4Class>,
}

impl So4Classification {
    pub fn counts(&self) -> Vec<(usize, usize)> {
        self.classes.iter().map(|c| (c.s, c.count())).collect()
    }
}

fn cluster(cands: impl IntoIterator<Item = UniformSubspaceCandidate>) -> Result<(Vec<UniformSubspaceCandidate>, Vec<Vec<f64>>)> {
    let mut reps = Vec::new();
    let mut prints: Vec<Vec<f64>> = Vec::new();
    for cand in cands {
        let fp = equivalence_invariants(&cand)?;
        if !prints.iter().any(|p| fingerprints_match(p, &fp, CLUSTER_TOL)) {
            reps.push(cand);
            prints.push(fp);
        }
    }
    Ok((reps, prints))
}

/// Searches `so(4)` for uniform subspaces of dimension 1, 2, 3, clusters them
/// by fingerprint, and obtains dimensions 4, 5, 6 as complements.
pub fn classify_so4(opts: &SearchOptions) -> Result<So4Classification> {
    let mut classes: Vec<So4Class> = Vec::new();
    for s in 1..=3 {
        let found = search_uniform(4, s, opts)?;
        let (representatives, fingerprints) = cluster(found.candidates.into_iter().map(|c| c.0))?;
        classes.push(So4Class { s, representatives, fingerprints, by_duality: false, best_residual: Some(found.best_residual) });
    }
    for s in 4..=6 {
        let dual: Vec<UniformSubspaceCandidate> = if s == 6 {
            vec![UniformSubspaceCandidate { r: 4, basis: Vec::new() }]
        } else {
            classes[6 - s - 1].representatives.clone()
        };
        let complements = dual
            .iter()
            .map(|c| complement_uniform(c, opts.tol_opt))
            .collect::<Result<Vec<_>>>()?;
        let (representatives, fingerprints) = cluster(complements)?;
        classes.push(So4Class { s, representatives, fingerprints, by_duality: true, best_residual: None });
    }
    Ok(So4Classification { classes })
}
