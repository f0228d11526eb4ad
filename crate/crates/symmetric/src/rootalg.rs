use std::fmt;

use nalgebra::{DMatrix, DVector};
use solvgeom_algebra::{tol, MetricLieAlgebra};

use crate::{Result, SymmetricError};

/// Which symmetric space an algebra was built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    SoPq { p: usize, q: usize },
    SuPq { p: usize, q: usize },
    SpPq { p: usize, q: usize },
    /// `so(n, H)`, also written `so*(2n)`.
    SoNH { n: usize },
    /// `sl(n, H)`, also written `su*(2n)`.
    SlNH { n: usize },
    /// `sl(n, C)` viewed as a real algebra.
    TypeIvSl { n: usize },
    SlNR { n: usize },
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Space::SoPq { p, q } => write!(f, "so({p},{q})"),
            Space::SuPq { p, q } => write!(f, "su({p},{q})"),
            Space::SpPq { p, q } => write!(f, "sp({p},{q})"),
            Space::SoNH { n } => write!(f, "so({n},H)"),
            Space::SlNH { n } => write!(f, "sl({n},H)"),
            Space::TypeIvSl { n } => write!(f, "sl({n},C)"),
            Space::SlNR { n } => write!(f, "sl({n},R)"),
        }
    }
}

/// An Iwasawa algebra `a + n` whose nilradical basis consists of root
/// vectors, each carrying its root in the coordinates `omega_1, ..., omega_k`
/// and a construction tag (the basis label).
#[derive(Clone, Debug, PartialEq)]
pub struct RootDecoratedAlgebra {
    base: MetricLieAlgebra,
    space: Space,
    roots: Vec<Vec<i32>>,
    omega: DMatrix<f64>,
    norm_constant: f64,
}

/// Residuals of the conditions a basis of `n` needs before it can be twisted.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasisConditions {
    /// `max |[h, e] - alpha(h) e|` over Cartan vectors `h` and root vectors `e`.
    pub root_vector_residual: f64,
    /// `max |G - I|`.
    pub orthonormality_residual: f64,
    /// Every bracket of two basis vectors is a multiple of one basis vector.
    pub monomial: bool,
    /// `max |<[X,Y],[X,U]>|` over basis vectors with `Y != U`.
    pub perpendicularity_residual: f64,
}

impl BasisConditions {
    pub fn hold(&self, tol: f64) -> bool {
        self.monomial
            && self.root_vector_residual <= tol
            && self.orthonormality_residual <= tol
            && self.perpendicularity_residual <= tol
    }
}

impl RootDecoratedAlgebra {
    /// Wraps a decorated algebra, checking that every nilradical basis
    /// vector is a root vector for `sum_j roots[e][j] * omega_j`.
    pub fn new(
        base: MetricLieAlgebra,
        space: Space,
        roots: Vec<Vec<i32>>,
        omega: DMatrix<f64>,
        norm_constant: f64,
    ) -> Result<Self> {
        let alg = Self { base, space, roots, omega, norm_constant };
        let dec = alg.base.decoration().ok_or(solvgeom_algebra::AlgebraError::DecorationMissing)?;
        if alg.roots.len() != dec.n_indices.len() || alg.omega.ncols() != dec.a_indices.len() {
            return Err(SymmetricError::InvalidParameters("root data does not match the decoration".into()));
        }
        if alg.roots.iter().any(|r| r.len() != alg.omega.nrows()) {
            return Err(SymmetricError::InvalidParameters("roots need one coefficient per omega".into()));
        }
        for (slot, &e) in dec.n_indices.iter().enumerate() {
            let residual = alg.root_vector_residual_at(slot);
            if residual > tol::EXACT {
                return Err(SymmetricError::RootMismatch { index: e, residual });
            }
        }
        Ok(alg)
    }

    pub fn base(&self) -> &MetricLieAlgebra {
        &self.base
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn tags(&self) -> &[String] {
        self.base.labels()
    }

    pub fn index_of(&self, tag: &str) -> Result<usize> {
        self.base.index_of(tag).ok_or_else(|| SymmetricError::UnknownLabel(tag.to_string()))
    }

    pub fn a_indices(&self) -> &[usize] {
        &self.decoration().a_indices
    }

    pub fn n_indices(&self) -> &[usize] {
        &self.decoration().n_indices
    }

    /// `omega[(j, a)] = omega_j(h_a)`.
    pub fn omega(&self) -> &DMatrix<f64> {
        &self.omega
    }

    /// Trace-form norm squared shared by the realized basis matrices.
    pub fn norm_constant(&self) -> f64 {
        self.norm_constant
    }

    /// Root of a nilradical basis index, in omega coordinates.
    pub fn root_of(&self, index: usize) -> Option<&[i32]> {
        self.n_indices().iter().position(|&e| e == index).map(|slot| self.roots[slot].as_slice())
    }

    /// Distinct roots in order of first appearance.
    pub fn roots(&self) -> Vec<Vec<i32>> {
        let mut out: Vec<Vec<i32>> = Vec::new();
        for r in &self.roots {
            if !out.contains(r) {
                out.push(r.clone());
            }
        }
        out
    }

    /// Basis indices spanning the root space of `root`.
    pub fn root_space(&self, root: &[i32]) -> Vec<usize> {
        self.n_indices().iter().zip(&self.roots).filter(|(_, r)| r.as_slice() == root).map(|(&e, _)| e).collect()
    }

    /// Rank of the symmetric space, `dim a`.
    pub fn rank(&self) -> usize {
        self.a_indices().len()
    }

    /// Same root data on a new algebra with the same basis and decoration,
    /// as produced by a sign twist.
    pub(crate) fn with_base(&self, base: MetricLieAlgebra) -> Self {
        Self { base, ..self.clone() }
    }

    pub fn basis_conditions(&self) -> BasisConditions {
        let root_vector_residual =
            (0..self.roots.len()).map(|slot| self.root_vector_residual_at(slot)).fold(0.0, f64::max);
        let d = self.dim();
        let orthonormality_residual = (self.base.gram() - DMatrix::<f64>::identity(d, d)).amax();
        let n = self.n_indices();
        let mut monomial = true;
        let mut brackets: Vec<Vec<DVector<f64>>> = Vec::with_capacity(n.len());
        for &x in n {
            let row: Vec<DVector<f64>> = n
                .iter()
                .map(|&y| self.base.bracket(&self.base.basis_vector(x), &self.base.basis_vector(y)).expect("basis"))
                .collect();
            for br in &row {
                if br.iter().filter(|c| c.abs() > tol::ZERO).count() > 1 {
                    monomial = false;
                }
            }
            brackets.push(row);
        }
        let mut perpendicularity_residual = 0.0_f64;
        for row in &brackets {
            for y in 0..row.len() {
                for u in y + 1..row.len() {
                    perpendicularity_residual = perpendicularity_residual.max(self.base.inner(&row[y], &row[u]).abs());
                }
            }
        }
        BasisConditions { root_vector_residual, orthonormality_residual, monomial, perpendicularity_residual }
    }

    fn decoration(&self) -> &solvgeom_algebra::Decoration {
        self.base.decoration().expect("checked at construction")
    }

    fn root_vector_residual_at(&self, slot: usize) -> f64 {
        let dec = self.decoration();
        let e = dec.n_indices[slot];
        let mut worst = 0.0_f64;
        for (a, &h) in dec.a_indices.iter().enumerate() {
            let value: f64 = self.roots[slot].iter().enumerate().map(|(j, &c)| c as f64 * self.omega[(j, a)]).sum();
            let br = self.base.bracket(&self.base.basis_vector(h), &self.base.basis_vector(e)).expect("basis");
            let expected = self.base.basis_vector(e) * value;
            worst = worst.max((br - expected).amax());
        }
        worst
    }
}
