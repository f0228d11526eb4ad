use crate::rootalg::{RootDecoratedAlgebra, Space};
use crate::twist::TwistAssignment;
use crate::{Result, SymmetricError};

/// Tag up to the underscore: `B-` for `B-_12`.
pub(crate) fn family(tag: &str) -> &str {
    tag.split('_').next().unwrap_or(tag)
}

fn by_family(alg: &RootDecoratedAlgebra, families: &[&str]) -> Result<TwistAssignment> {
    let chosen = alg.n_indices().iter().copied().filter(|&e| families.contains(&family(&alg.tags()[e])));
    TwistAssignment::from_indices(alg, chosen.collect::<Vec<_>>())
}

/// Column of `C` carried by a `W_k.c` vector.
pub(crate) fn w_column(tag: &str) -> Option<usize> {
    let rest = tag.strip_prefix("W_")?;
    let (_, col) = rest.split_once('.')?;
    col.trim_end_matches(['i', 'j', 'k']).parse().ok()
}

/// Twists the vectors of `W_b`, the part of `W = sum_k n_{omega_k}` whose
/// `C` block vanishes in its first `a` columns.
pub fn wa_twist(alg: &RootDecoratedAlgebra, a: usize) -> Result<TwistAssignment> {
    let (p, q) = match alg.space() {
        Space::SoPq { p, q } | Space::SuPq { p, q } | Space::SpPq { p, q } => (p, q),
        other => return Err(SymmetricError::WrongSpace { expected: "so(p,q), su(p,q) or sp(p,q)", got: other.to_string() }),
    };
    let m = q - p;
    if m < 2 {
        return Err(SymmetricError::InvalidParameters(format!("the W_a twist needs q - p >= 2, got {m}")));
    }
    if a < 1 || a >= m {
        return Err(SymmetricError::InvalidParameters(format!("need 1 <= a < {m}, got {a}")));
    }
    let chosen = alg.n_indices().iter().copied().filter(|&e| w_column(&alg.tags()[e]).is_some_and(|c| c > a));
    TwistAssignment::from_indices(alg, chosen.collect::<Vec<_>>())
}

/// The twist of `so(n,H)`: `B-, C-, A+, D+, G` for even `n`, and
/// `X, Z, B+, C+, B-, C-` for odd `n`.
pub fn named_twist_so_nh(alg: &RootDecoratedAlgebra) -> Result<TwistAssignment> {
    let Space::SoNH { n } = alg.space() else {
        return Err(SymmetricError::WrongSpace { expected: "so(n,H)", got: alg.space().to_string() });
    };
    if n % 2 == 0 {
        by_family(alg, &["B-", "C-", "A+", "D+", "G"])
    } else {
        by_family(alg, &["X", "Z", "B+", "C+", "B-", "C-"])
    }
}

/// The twist of `sl(n,H)` multiplying every `A_jk` and `C_jk` by `sqrt(-1)`.
pub fn named_twist_sl_nh(alg: &RootDecoratedAlgebra) -> Result<TwistAssignment> {
    let Space::SlNH { .. } = alg.space() else {
        return Err(SymmetricError::WrongSpace { expected: "sl(n,H)", got: alg.space().to_string() });
    };
    by_family(alg, &["A", "C"])
}

/// Twist of a complex algebra viewed as real: every `J X_alpha`. For rank
/// one the nilradical is abelian, every twist is isometric to the
/// symmetric space, and the identity is returned.
pub fn type_iv_twist(alg: &RootDecoratedAlgebra) -> Result<TwistAssignment> {
    let Space::TypeIvSl { n } = alg.space() else {
        return Err(SymmetricError::WrongSpace { expected: "sl(n,C)", got: alg.space().to_string() });
    };
    if n < 3 {
        return Ok(TwistAssignment::identity(alg));
    }
    by_family(alg, &["JX"])
}
