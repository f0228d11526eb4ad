use nalgebra::DMatrix;
use solvgeom_algebra::{tol, Decoration, MetricLieAlgebra};

use crate::{skew_inner, CarnotError, Result};

/// `(v, z, j)` with `v = R^r`, `z = R^s` and `j(Z_k)` given for an
/// orthonormal basis `Z_k` of `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct DataTriple {
    r: usize,
    j_mats: Vec<DMatrix<f64>>,
}

impl DataTriple {
    pub fn new(r: usize, j_mats: Vec<DMatrix<f64>>) -> Result<Self> {
        if r == 0 {
            return Err(CarnotError::EmptyV);
        }
        for (index, m) in j_mats.iter().enumerate() {
            if m.nrows() != r || m.ncols() != r {
                return Err(CarnotError::Shape { index, rows: m.nrows(), cols: m.ncols(), r });
            }
            if m.iter().any(|v| !v.is_finite()) {
                return Err(solvgeom_algebra::AlgebraError::NonFinite("j matrices").into());
            }
            let residual = (m + m.transpose()).amax();
            if residual > tol::EXACT * m.amax().max(1.0) {
                return Err(CarnotError::NotSkew { index, residual });
            }
        }
        Ok(Self { r, j_mats })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.j_mats.len()
    }

    pub fn j_mats(&self) -> &[DMatrix<f64>] {
        &self.j_mats
    }
}

/// Structure constants of `n = v + z` (indices `0..r` for `v`, `r..r+s` for
/// `z`): `[X_a, X_b] = sum_k <j(Z_k) X_a, X_b> Z_k`.
pub fn brackets_from_j(triple: &DataTriple) -> Vec<(usize, usize, usize, f64)> {
    let r = triple.r;
    let mut out = Vec::new();
    for (k, j) in triple.j_mats.iter().enumerate() {
        for a in 0..r {
            for b in a + 1..r {
                let c = j[(b, a)];
                if c != 0.0 {
                    out.push((a, b, r + k, c));
                }
            }
        }
    }
    out
}

/// The solvable extension `R A + v + z` with `ad(A) = 1/2` on `v` and `1` on
/// `z`, in the orthonormal basis `A, X_1..X_r, Z_1..Z_s`.
pub fn build_solvmanifold(triple: &DataTriple) -> MetricLieAlgebra {
    let (r, s) = (triple.r, triple.s());
    let mut quads: Vec<_> = brackets_from_j(triple).into_iter().map(|(a, b, k, c)| (a + 1, b + 1, k + 1, c)).collect();
    quads.extend((1..=r).map(|i| (0, i, i, 0.5)));
    quads.extend((r + 1..=r + s).map(|i| (0, i, i, 1.0)));
    let mut labels = vec!["A".to_string()];
    labels.extend((1..=r).map(|i| format!("X{i}")));
    labels.extend((1..=s).map(|i| format!("Z{i}")));
    let mut roots = vec![vec![0.5]; r];
    roots.extend(vec![vec![1.0]; s]);
    MetricLieAlgebra::new(1 + r + s, quads)
        .and_then(|alg| alg.with_labels(labels))
        .and_then(|alg| alg.with_decoration(Decoration { a_indices: vec![0], n_indices: (1..=r + s).collect(), roots }))
        .expect("validated triple gives a well-formed algebra")
}

/// Reads `j` off a two-step algebra whose `v` and `z` basis vectors are
/// orthonormal.
pub fn j_from_brackets(alg: &MetricLieAlgebra, v: &[usize], z: &[usize]) -> Result<DataTriple> {
    let all: Vec<usize> = v.iter().chain(z).copied().collect();
    for &i in &all {
        if i >= alg.dim() {
            return Err(solvgeom_algebra::AlgebraError::IndexOutOfRange { index: i, dim: alg.dim() }.into());
        }
    }
    let g = alg.gram();
    for (p, &i) in all.iter().enumerate() {
        for (q, &k) in all.iter().enumerate() {
            let expected = if p == q { 1.0 } else { 0.0 };
            if (g[(i, k)] - expected).abs() > tol::EXACT {
                return Err(CarnotError::NotOrthonormal);
            }
        }
    }
    let scale = alg.tensor().iter().fold(0.0_f64, |m, c| m.max(c.abs())).max(1.0);
    for &zi in z {
        for &x in &all {
            for k in 0..alg.dim() {
                if alg.structure_constant(zi, x, k).abs() > tol::EXACT * scale {
                    return Err(CarnotError::NotCentral);
                }
            }
        }
    }
    let r = v.len();
    let mut j_mats = vec![DMatrix::zeros(r, r); z.len()];
    for (a, &va) in v.iter().enumerate() {
        for (b, &vb) in v.iter().enumerate() {
            for k in 0..alg.dim() {
                let c = alg.structure_constant(va, vb, k);
                match z.iter().position(|&zk| zk == k) {
                    Some(kk) => j_mats[kk][(b, a)] = c,
                    None if c.abs() > tol::EXACT * scale => return Err(CarnotError::NotTwoStep),
                    None => {}
                }
            }
        }
    }
    DataTriple::new(r, j_mats)
}

/// Residuals of the two Einstein conditions for a Carnot solvmanifold.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EinsteinConditions {
    /// `max |(j(Z_a), j(Z_b)) - delta_ab|`: `j` is an isometry onto its image.
    pub cond_i: f64,
    /// `max |sum_k j(Z_k)^2 + s Id|`: the sum of squares is scalar.
    pub cond_ii: f64,
}

impl EinsteinConditions {
    pub fn holds(&self, tol: f64) -> bool {
        self.cond_i <= tol && self.cond_ii <= tol
    }
}

pub fn einstein_conditions(triple: &DataTriple) -> Result<EinsteinConditions> {
    let s = triple.s();
    if s == 0 {
        return Err(CarnotError::EmptyCenter);
    }
    let js = &triple.j_mats;
    let mut cond_i = 0.0_f64;
    for a in 0..s {
        for b in 0..s {
            let delta = if a == b { 1.0 } else { 0.0 };
            cond_i = cond_i.max((skew_inner(&js[a], &js[b]) - delta).abs());
        }
    }
    let r = triple.r;
    let sum = js.iter().fold(DMatrix::identity(r, r) * s as f64, |acc, j| acc + j * j);
    Ok(EinsteinConditions { cond_i, cond_ii: sum.amax() })
}
