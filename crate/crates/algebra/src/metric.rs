use nalgebra::{DMatrix, DVector};

use crate::linalg::{self, gram_schmidt, sym_eigenvalues};
use crate::{AlgebraError, Result};

/// One nonzero structure constant `c[i][j][k]` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: f64,
}

/// Iwasawa splitting `s = a + n` of a metric solvable algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Decoration {
    pub a_indices: Vec<usize>,
    pub n_indices: Vec<usize>,
    /// Root functional of each vector of `n_indices`, in the same order,
    /// as coefficients over a basis of the dual of `a`.
    pub roots: Vec<Vec<f64>>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValidationReport {
    pub jacobi_residual: f64,
    pub antisym_residual: f64,
    pub gram_min_eig: f64,
    pub passes: bool,
}

/// A real Lie algebra with a basis, structure constants and a Gram matrix.
///
/// Values are immutable; everything derived from the metric (inverse Gram
/// matrix, an orthonormal frame) is computed once at construction.
#[derive(Clone, Debug)]
pub struct MetricLieAlgebra {
    dim: usize,
    entries: Vec<StructureEntry>,
    tensor: Vec<f64>,
    gram: DMatrix<f64>,
    gram_inv: DMatrix<f64>,
    frame: DMatrix<f64>,
    frame_inv: DMatrix<f64>,
    labels: Vec<String>,
    decoration: Option<Decoration>,
}

impl PartialEq for MetricLieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.entries == other.entries
            && self.gram == other.gram
            && self.labels == other.labels
            && self.decoration == other.decoration
    }
}

impl MetricLieAlgebra {
    /// Builds an algebra with an orthonormal basis from `(i, j, k, c)`
    /// quadruples meaning `[e_i, e_j]` has `e_k`-coefficient `c`.
    ///
    /// Entries with `i > j` are rewritten as `(j, i, k, -c)` and repeated
    /// entries are summed. An entry with `i == j` and `c != 0` is rejected.
    pub fn new(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, f64)>) -> Result<Self> {
        if dim == 0 {
            return Err(AlgebraError::Malformed("dimension must be positive".into()));
        }
        let mut tensor = vec![0.0; dim * dim * dim];
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index, dim });
                }
            }
            if !c.is_finite() {
                return Err(AlgebraError::NonFinite("structure constants"));
            }
            if i == j {
                if c != 0.0 {
                    return Err(AlgebraError::NotAntisymmetric { i, j, k });
                }
                continue;
            }
            let (a, b, s) = if i < j { (i, j, c) } else { (j, i, -c) };
            tensor[(a * dim + b) * dim + k] += s;
        }
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..dim {
                    let v = tensor[(i * dim + j) * dim + k];
                    if v != 0.0 {
                        entries.push(StructureEntry { i, j, k, value: v });
                        tensor[(j * dim + i) * dim + k] = -v;
                    }
                }
            }
        }
        let gram = DMatrix::identity(dim, dim);
        Ok(Self {
            dim,
            entries,
            tensor,
            gram_inv: gram.clone(),
            frame: gram.clone(),
            frame_inv: gram.clone(),
            gram,
            labels: (0..dim).map(|i| format!("e{i}")).collect(),
            decoration: None,
        })
    }

    /// Builds an algebra from a dense tensor `c[(i*n + j)*n + k]`, rejecting
    /// it if antisymmetry fails by more than `tol`.
    pub fn from_tensor(dim: usize, tensor: &[f64], tol: f64) -> Result<Self> {
        if tensor.len() != dim * dim * dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim * dim * dim, got: tensor.len() });
        }
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    let a = tensor[(i * dim + j) * dim + k];
                    let b = tensor[(j * dim + i) * dim + k];
                    if (a + b).abs() > tol {
                        return Err(AlgebraError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        let mut quads = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..dim {
                    let a = tensor[(i * dim + j) * dim + k];
                    let b = tensor[(j * dim + i) * dim + k];
                    let v = 0.5 * (a - b);
                    if v != 0.0 {
                        quads.push((i, j, k, v));
                    }
                }
            }
        }
        Self::new(dim, quads)
    }

    /// Replaces the inner product. The Gram matrix must be symmetric positive
    /// definite.
    pub fn with_gram(mut self, gram: DMatrix<f64>) -> Result<Self> {
        if gram.nrows() != self.dim || gram.ncols() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: gram.nrows() });
        }
        if gram.iter().any(|v| !v.is_finite()) {
            return Err(AlgebraError::NonFinite("gram matrix"));
        }
        let scale = linalg::max_abs(&gram).max(1.0);
        if linalg::max_abs(&(&gram - gram.transpose())) > 1e-12 * scale {
            return Err(AlgebraError::GramNotPositive { min_eig: f64::NAN });
        }
        let min_eig = sym_eigenvalues(&gram)[0];
        if !(min_eig > 1e-14 * scale) {
            return Err(AlgebraError::GramNotPositive { min_eig });
        }
        let gram = (&gram + gram.transpose()) * 0.5;
        let identity = DMatrix::identity(self.dim, self.dim);
        let frame = gram_schmidt(&identity, &gram, 1e-14).ok_or(AlgebraError::GramNotPositive { min_eig })?;
        self.frame_inv = frame.clone().try_inverse().ok_or(AlgebraError::GramNotPositive { min_eig })?;
        self.gram_inv = gram.clone().try_inverse().ok_or(AlgebraError::GramNotPositive { min_eig })?;
        self.frame = frame;
        self.gram = gram;
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Attaches an Iwasawa splitting. Index sets must partition the basis and
    /// every nilradical vector needs a root of common length.
    pub fn with_decoration(mut self, decoration: Decoration) -> Result<Self> {
        let mut seen = vec![false; self.dim];
        for &i in decoration.a_indices.iter().chain(&decoration.n_indices) {
            if i >= self.dim {
                return Err(AlgebraError::IndexOutOfRange { index: i, dim: self.dim });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(AlgebraError::InvalidDecoration(format!("index {i} listed twice")));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(AlgebraError::InvalidDecoration("a and n indices must cover the basis".into()));
        }
        if decoration.roots.len() != decoration.n_indices.len() {
            return Err(AlgebraError::InvalidDecoration("one root per nilradical index required".into()));
        }
        let width = decoration.a_indices.len();
        if decoration.roots.iter().any(|r| r.len() != width) {
            return Err(AlgebraError::InvalidDecoration(format!("roots must have {width} coefficients")));
        }
        if decoration.roots.iter().flatten().any(|v| !v.is_finite()) {
            return Err(AlgebraError::NonFinite("roots"));
        }
        self.decoration = Some(decoration);
        Ok(self)
    }

    /// Same basis, metric, labels and decoration with structure constants
    /// rewritten entry by entry.
    pub fn map_structure(&self, mut f: impl FnMut(&StructureEntry) -> f64) -> Self {
        let quads: Vec<_> = self.entries.iter().map(|e| (e.i, e.j, e.k, f(e))).collect();
        let mut out = Self::new(self.dim, quads).expect("indices already validated");
        out.gram = self.gram.clone();
        out.gram_inv = self.gram_inv.clone();
        out.frame = self.frame.clone();
        out.frame_inv = self.frame_inv.clone();
        out.labels = self.labels.clone();
        out.decoration = self.decoration.clone();
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero structure constants with `i < j`, ordered by `(i, j, k)`.
    pub fn entries(&self) -> &[StructureEntry] {
        &self.entries
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.tensor[(i * self.dim + j) * self.dim + k]
    }

    /// Dense tensor `c[(i*n + j)*n + k]`.
    pub fn tensor(&self) -> &[f64] {
        &self.tensor
    }

    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    pub fn gram_inv(&self) -> &DMatrix<f64> {
        &self.gram_inv
    }

    /// Columns form an orthonormal basis: `F^T G F = I`, `F` upper triangular.
    pub fn frame(&self) -> &DMatrix<f64> {
        &self.frame
    }

    pub fn frame_inv(&self) -> &DMatrix<f64> {
        &self.frame_inv
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn decoration(&self) -> Option<&Decoration> {
        self.decoration.as_ref()
    }

    pub fn basis_vector(&self, i: usize) -> DVector<f64> {
        let mut v = DVector::zeros(self.dim);
        v[i] = 1.0;
        v
    }

    fn check_len(&self, v: &DVector<f64>) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch { expected: self.dim, got: v.len() })
        }
    }

    pub fn bracket(&self, x: &DVector<f64>, y: &DVector<f64>) -> Result<DVector<f64>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = DVector::zeros(self.dim);
        for e in &self.entries {
            let w = x[e.i] * y[e.j] - x[e.j] * y[e.i];
            if w != 0.0 {
                out[e.k] += w * e.value;
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(e_i)`: column `j` holds `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> DMatrix<f64> {
        let n = self.dim;
        DMatrix::from_fn(n, n, |k, j| self.tensor[(i * n + j) * n + k])
    }

    pub fn ad_matrix(&self, x: &DVector<f64>) -> Result<DMatrix<f64>> {
        self.check_len(x)?;
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for e in &self.entries {
            // [x, e_j] picks up x_i c[i][j][k]; [x, e_i] picks up -x_j c[i][j][k].
            m[(e.k, e.j)] += x[e.i] * e.value;
            m[(e.k, e.i)] -= x[e.j] * e.value;
        }
        Ok(m)
    }

    /// Adjoint of `m` with respect to the inner product: `G^-1 M^T G`.
    pub fn metric_adjoint(&self, m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        if m.nrows() != self.dim || m.ncols() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: m.nrows() });
        }
        Ok(&self.gram_inv * m.transpose() * &self.gram)
    }

    pub fn inner(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        linalg::inner(x, y, &self.gram)
    }

    pub fn norm(&self, x: &DVector<f64>) -> f64 {
        self.inner(x, x).max(0.0).sqrt()
    }

    /// `B[i][j] = tr(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> DMatrix<f64> {
        let ads: Vec<_> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut b = DMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ads[i].component_mul(&ads[j].transpose()).sum();
                b[(i, j)] = t;
                b[(j, i)] = t;
            }
        }
        b
    }

    /// Largest violation of the Jacobi identity over basis triples.
    pub fn jacobi_residual(&self) -> f64 {
        jacobi_residual_tensor(self.dim, &self.tensor)
    }

    pub fn validate(&self, tol: f64) -> ValidationReport {
        let jacobi_residual = self.jacobi_residual();
        let antisym_residual = antisymmetry_residual(self.dim, &self.tensor);
        let gram_min_eig = sym_eigenvalues(&self.gram)[0];
        ValidationReport {
            jacobi_residual,
            antisym_residual,
            gram_min_eig,
            passes: jacobi_residual <= tol && antisym_residual <= tol && gram_min_eig > 0.0,
        }
    }

    /// The metric subalgebra spanned by the columns of `basis` with the
    /// induced inner product. Fails if the span is not closed under the
    /// bracket to within `tol` (relative to the size of the brackets).
    pub fn subalgebra(&self, basis: &DMatrix<f64>, tol: f64) -> Result<MetricLieAlgebra> {
        if basis.nrows() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: basis.nrows() });
        }
        let m = basis.ncols();
        if m == 0 || linalg::rank(basis, 1e-12) < m {
            return Err(AlgebraError::Dependent);
        }
        let pinv = basis
            .clone()
            .pseudo_inverse(1e-14)
            .map_err(|_| AlgebraError::Dependent)?;
        let mut quads = Vec::new();
        let mut residual = 0.0_f64;
        for a in 0..m {
            for b in a + 1..m {
                let br = self.bracket(&basis.column(a).into_owned(), &basis.column(b).into_owned())?;
                let coeffs = &pinv * &br;
                let scale = br.amax().max(1.0);
                residual = residual.max((basis * &coeffs - &br).amax() / scale);
                for (k, &c) in coeffs.iter().enumerate() {
                    if c.abs() > crate::tol::ZERO * scale {
                        quads.push((a, b, k, c));
                    }
                }
            }
        }
        if residual > tol {
            return Err(AlgebraError::NotClosed { residual });
        }
        let gram = basis.transpose() * &self.gram * basis;
        MetricLieAlgebra::new(m, quads)?.with_gram(gram)
    }
}

/// `max |c[i][j][k] + c[j][i][k]|` over a dense tensor.
pub fn antisymmetry_residual(dim: usize, tensor: &[f64]) -> f64 {
    let mut r = 0.0_f64;
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                r = r.max((tensor[(i * dim + j) * dim + k] + tensor[(j * dim + i) * dim + k]).abs());
            }
        }
    }
    r
}

/// Largest entry of `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` over
/// all basis triples, for a dense tensor `c[(i*n + j)*n + k]`.
pub fn jacobi_residual_tensor(dim: usize, tensor: &[f64]) -> f64 {
    let c = |i: usize, j: usize, k: usize| tensor[(i * dim + j) * dim + k];
    let mut worst = 0.0_f64;
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                for l in 0..dim {
                    let mut s = 0.0;
                    for m in 0..dim {
                        s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
                    }
                    worst = worst.max(s.abs());
                }
            }
        }
    }
    worst
}
