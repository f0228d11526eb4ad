use nalgebra::{DMatrix, DVector};

use crate::gf2;
use crate::rootalg::RootDecoratedAlgebra;
use crate::twist::{twist_closure_check, TwistAssignment};
use crate::{Result, SymmetricError};

/// Positive roots that are not a sum of two positive roots.
pub fn simple_roots(alg: &RootDecoratedAlgebra) -> Vec<Vec<i32>> {
    let roots = alg.roots();
    roots
        .iter()
        .filter(|alpha| {
            !roots.iter().any(|beta| {
                let rest: Vec<i32> = alpha.iter().zip(beta.iter()).map(|(a, b)| a - b).collect();
                roots.contains(&rest)
            })
        })
        .cloned()
        .collect()
}

/// Integer coefficients of `root` over `base`. Fails unless the expansion
/// exists, is integral and is nonnegative.
pub fn expand_in_base(root: &[i32], base: &[Vec<i32>]) -> Result<Vec<i64>> {
    if base.is_empty() {
        return Err(SymmetricError::BadBase("empty base".into()));
    }
    let width = root.len();
    if base.iter().any(|b| b.len() != width) {
        return Err(SymmetricError::BadBase("base vectors have the wrong length".into()));
    }
    let m = DMatrix::from_fn(width, base.len(), |r, c| base[c][r] as f64);
    let rhs = DVector::from_fn(width, |r, _| root[r] as f64);
    let svd = m.clone().svd(true, true);
    let x = svd.solve(&rhs, 1e-9).map_err(|e| SymmetricError::BadBase(e.to_string()))?;
    let coeffs: Vec<i64> = x.iter().map(|v| v.round() as i64).collect();
    let back: Vec<i64> = (0..width).map(|r| (0..base.len()).map(|c| coeffs[c] * base[c][r] as i64).sum()).collect();
    if back.iter().zip(root).any(|(&b, &r)| b != r as i64) {
        return Err(SymmetricError::BadBase(format!("{root:?} is not an integer combination of the base")));
    }
    if coeffs.iter().any(|&c| c < 0) {
        return Err(SymmetricError::BadBase(format!("{root:?} has a negative coefficient {coeffs:?}")));
    }
    Ok(coeffs)
}

/// Parity `rh(alpha) mod 2` on the root space of `alpha`, where
/// `rh(alpha)` sums the coefficients of `alpha` over the base vectors
/// listed in `subset`.
pub fn restricted_height_twist(
    alg: &RootDecoratedAlgebra,
    base: &[Vec<i32>],
    subset: &[usize],
) -> Result<TwistAssignment> {
    if let Some(&j) = subset.iter().find(|&&j| j >= base.len()) {
        return Err(SymmetricError::BadBase(format!("subset index {j} out of range")));
    }
    let mut bits = vec![false; alg.dim()];
    for root in alg.roots() {
        let coeffs = expand_in_base(&root, base)?;
        let rh: i64 = subset.iter().map(|&j| coeffs[j]).sum();
        for e in alg.root_space(&root) {
            bits[e] = rh % 2 == 1;
        }
    }
    TwistAssignment::from_bits(alg, bits)
}

/// Valid twists of an algebra, up to restricted-height twists.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistEnumeration {
    /// Basis (over GF(2)) of all twists passing the closure check.
    pub solutions: Vec<TwistAssignment>,
    /// Restricted-height twists of the simple roots, one per simple root.
    pub restricted_height: Vec<TwistAssignment>,
    /// Dimension of the span of `restricted_height`.
    pub restricted_height_rank: usize,
    /// Twists completing `restricted_height` to a basis of the solutions;
    /// they represent the nontrivial classes.
    pub representatives: Vec<TwistAssignment>,
}

impl TwistEnumeration {
    /// Number of classes of valid twists modulo restricted-height twists.
    pub fn class_count(&self) -> u128 {
        1u128 << self.representatives.len()
    }
}

/// Solves the parity system `p_k = p_i XOR p_j` over all nonzero structure
/// constants of `n` and quotients the solution space by the
/// restricted-height twists.
pub fn enumerate_twists(alg: &RootDecoratedAlgebra) -> Result<TwistEnumeration> {
    twist_closure_check(alg, &TwistAssignment::identity(alg))?;
    let n = alg.n_indices();
    let slot = |i: usize| n.iter().position(|&e| e == i);
    let mut equations = Vec::new();
    for e in alg.base().entries() {
        if let (Some(i), Some(j), Some(k)) = (slot(e.i), slot(e.j), slot(e.k)) {
            let mut row = vec![false; n.len()];
            row[i] ^= true;
            row[j] ^= true;
            row[k] ^= true;
            equations.push(row);
        }
    }
    let to_twist = |v: &[bool]| TwistAssignment::from_n_bits(alg, v);
    let solution_bits = gf2::null_space(&equations, n.len());
    let base = simple_roots(alg);
    let mut rh_bits = Vec::with_capacity(base.len());
    let mut restricted_height = Vec::with_capacity(base.len());
    for j in 0..base.len() {
        let t = restricted_height_twist(alg, &base, &[j])?;
        rh_bits.push(n.iter().map(|&e| t.parity(e)).collect::<Vec<bool>>());
        restricted_height.push(t);
    }
    let restricted_height_rank = gf2::rank(&rh_bits, n.len());
    let mut spanned = rh_bits.clone();
    let mut representatives = Vec::new();
    for v in &solution_bits {
        let before = gf2::rank(&spanned, n.len());
        spanned.push(v.clone());
        if gf2::rank(&spanned, n.len()) > before {
            representatives.push(to_twist(v)?);
        } else {
            spanned.pop();
        }
    }
    Ok(TwistEnumeration {
        solutions: solution_bits.iter().map(|v| to_twist(v)).collect::<Result<_>>()?,
        restricted_height,
        restricted_height_rank,
        representatives,
    })
}
