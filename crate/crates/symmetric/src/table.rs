use solvgeom_algebra::tol;

use crate::rootalg::RootDecoratedAlgebra;
use crate::{Result, SymmetricError};

const NAMED: [(f64, &str); 4] =
    [(1.0, ""), (std::f64::consts::SQRT_2, "sqrt2*"), (2.0, "2*"), (std::f64::consts::FRAC_1_SQRT_2, "sqrt1/2*")];

/// `c * label` as table text: `G_1`, `-sqrt2*D+_12`, `2*X_1`, or a decimal
/// coefficient when `|c|` is not one of `1, sqrt 2, 2, 1/sqrt 2`.
pub fn format_coefficient(c: f64, label: &str) -> String {
    let sign = if c < 0.0 { "-" } else { "" };
    let mag = c.abs();
    match NAMED.iter().find(|(v, _)| (mag - v).abs() <= 1e-9) {
        Some((_, prefix)) => format!("{sign}{prefix}{label}"),
        None => format!("{sign}{mag:.6}*{label}"),
    }
}

/// Tab-separated table whose entry in row `R`, column `C` is `[R, C]`.
/// Rows and columns follow basis order, restricted to `labels` when given
/// and to the nilradical otherwise.
pub fn bracket_table(alg: &RootDecoratedAlgebra, labels: Option<&[String]>) -> Result<String> {
    let indices: Vec<usize> = match labels {
        Some(ls) => ls.iter().map(|l| alg.index_of(l)).collect::<Result<_>>()?,
        None => alg.n_indices().to_vec(),
    };
    let base = alg.base();
    let tags = alg.tags();
    let mut out = String::from("[row,col]");
    for &c in &indices {
        out.push('\t');
        out.push_str(&tags[c]);
    }
    out.push('\n');
    for &r in &indices {
        out.push_str(&tags[r]);
        for &c in &indices {
            let br = base.bracket(&base.basis_vector(r), &base.basis_vector(c))?;
            let nonzero: Vec<usize> = (0..br.len()).filter(|&k| br[k].abs() > tol::ZERO).collect();
            let entry = match nonzero.as_slice() {
                [] => "0".to_string(),
                [k] => format_coefficient(br[*k], &tags[*k]),
                _ => return Err(SymmetricError::NotMonomial { i: r, j: c }),
            };
            out.push('\t');
            out.push_str(&entry);
        }
        out.push('\n');
    }
    Ok(out)
}

/// First line at which two tables differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMismatch {
    /// 1-based line number.
    pub line: usize,
    pub expected: Option<String>,
    pub got: Option<String>,
}

/// `None` when `generated` and `golden` are byte-identical.
pub fn table_mismatch(generated: &str, golden: &str) -> Option<TableMismatch> {
    if generated == golden {
        return None;
    }
    let mut g = generated.split_inclusive('\n');
    let mut e = golden.split_inclusive('\n');
    let mut line = 1;
    loop {
        match (g.next(), e.next()) {
            (Some(a), Some(b)) if a == b => line += 1,
            (got, expected) => {
                return Some(TableMismatch {
                    line,
                    expected: expected.map(|s| s.trim_end_matches('\n').to_string()),
                    got: got.map(|s| s.trim_end_matches('\n').to_string()),
                })
            }
        }
    }
}
