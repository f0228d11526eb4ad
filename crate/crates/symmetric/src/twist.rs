use std::collections::BTreeMap;

use nalgebra::DMatrix;
use solvgeom_algebra::tol;
use solvgeom_curvature::{einstein_verdict, ricci};

use crate::rootalg::RootDecoratedAlgebra;
use crate::{Result, SymmetricError};

/// Parity bit per basis vector: 1 means the vector is replaced by
/// `sqrt(-1)` times itself. Cartan vectors always have parity 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistAssignment {
    bits: Vec<bool>,
}

impl TwistAssignment {
    pub fn identity(alg: &RootDecoratedAlgebra) -> Self {
        Self { bits: vec![false; alg.dim()] }
    }

    /// One bit per basis vector of the algebra.
    pub fn from_bits(alg: &RootDecoratedAlgebra, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != alg.dim() {
            return Err(SymmetricError::TwistLength { expected: alg.dim(), got: bits.len() });
        }
        if let Some(&h) = alg.a_indices().iter().find(|&&h| bits[h]) {
            return Err(SymmetricError::TwistOnCartan(h));
        }
        Ok(Self { bits })
    }

    /// One bit per nilradical vector, in the order of `alg.n_indices()`.
    pub fn from_n_bits(alg: &RootDecoratedAlgebra, n_bits: &[bool]) -> Result<Self> {
        if n_bits.len() != alg.n_indices().len() {
            return Err(SymmetricError::TwistLength { expected: alg.n_indices().len(), got: n_bits.len() });
        }
        let mut bits = vec![false; alg.dim()];
        for (&e, &b) in alg.n_indices().iter().zip(n_bits) {
            bits[e] = b;
        }
        Ok(Self { bits })
    }

    pub fn from_indices(alg: &RootDecoratedAlgebra, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = vec![false; alg.dim()];
        for i in indices {
            if i >= alg.dim() {
                return Err(SymmetricError::TwistLength { expected: alg.dim(), got: i + 1 });
            }
            bits[i] = true;
        }
        Self::from_bits(alg, bits)
    }

    pub fn from_labels(alg: &RootDecoratedAlgebra, labels: &[&str]) -> Result<Self> {
        let indices = labels.iter().map(|l| alg.index_of(l)).collect::<Result<Vec<_>>>()?;
        Self::from_indices(alg, indices)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn parity(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn twisted_indices(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&i| self.bits[i]).collect()
    }

    pub fn is_identity(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Composition of two twists.
    pub fn xor(&self, other: &Self) -> Self {
        Self { bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosureReport {
    pub ok: bool,
    /// Nonzero `c[i][j][k]` (with `i < j`) whose parities do not add up.
    pub violations: Vec<(usize, usize, usize)>,
}

/// Whether the twisted span is closed under the bracket: every nonzero
/// structure constant `c[i][j][k]` needs `p_k = p_i XOR p_j`.
pub fn twist_closure_check(alg: &RootDecoratedAlgebra, t: &TwistAssignment) -> Result<ClosureReport> {
    if t.bits.len() != alg.dim() {
        return Err(SymmetricError::TwistLength { expected: alg.dim(), got: t.bits.len() });
    }
    let mut targets: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut violations = Vec::new();
    for e in alg.base().entries() {
        if e.value.abs() <= tol::ZERO {
            continue;
        }
        if targets.insert((e.i, e.j), e.k).is_some() {
            return Err(SymmetricError::NotMonomial { i: e.i, j: e.j });
        }
        if t.bits[e.k] != (t.bits[e.i] ^ t.bits[e.j]) {
            violations.push((e.i, e.j, e.k));
        }
    }
    Ok(ClosureReport { ok: violations.is_empty(), violations })
}

/// The associated algebra with the twisted vectors in place of the
/// originals, written in the twisted basis: `c' = -c` exactly when both
/// bracketed vectors are twisted. The basis stays orthonormal.
pub fn twist(alg: &RootDecoratedAlgebra, t: &TwistAssignment) -> Result<RootDecoratedAlgebra> {
    let report = twist_closure_check(alg, t)?;
    if !report.ok {
        return Err(SymmetricError::ClosureViolation(report.violations));
    }
    let base = alg.base().map_structure(|e| if t.bits[e.i] && t.bits[e.j] { -e.value } else { e.value });
    Ok(alg.with_base(base))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PreservationReport {
    /// Ricci matrices agree entrywise within the tolerance.
    pub ric_match: bool,
    pub residual: f64,
    pub lambda: f64,
    pub lambda_twisted: f64,
    /// Both algebras pass the Einstein test at the same tolerance.
    pub both_einstein: bool,
}

/// Compares the Ricci matrices of `alg` and its twist under the
/// index-preserving identification of the two bases.
pub fn einstein_preservation_check(
    alg: &RootDecoratedAlgebra,
    t: &TwistAssignment,
    tol: f64,
) -> Result<PreservationReport> {
    let twisted = twist(alg, t)?;
    let ric: DMatrix<f64> = ricci(alg.base());
    let ric_t = ricci(twisted.base());
    let residual = (&ric - &ric_t).amax();
    let v = einstein_verdict(alg.base(), tol);
    let vt = einstein_verdict(twisted.base(), tol);
    Ok(PreservationReport {
        ric_match: residual <= tol,
        residual,
        lambda: v.lambda,
        lambda_twisted: vt.lambda,
        both_einstein: v.is_einstein && vt.is_einstein,
    })
}
