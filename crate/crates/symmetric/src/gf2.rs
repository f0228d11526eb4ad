//! Linear algebra over GF(2) on boolean vectors.

/// Reduced row echelon form in place; returns the pivot columns.
fn echelon(rows: &mut Vec<Vec<bool>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][col] {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(vectors: &[Vec<bool>], width: usize) -> usize {
    let mut rows = vectors.to_vec();
    echelon(&mut rows, width).len()
}

/// Basis of `{x : E x = 0}` for the equations `rows`.
pub(crate) fn null_space(equations: &[Vec<bool>], width: usize) -> Vec<Vec<bool>> {
    let mut rows = equations.to_vec();
    let pivots = echelon(&mut rows, width);
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![false; width];
            x[f] = true;
            for (row, &p) in rows.iter().zip(&pivots) {
                x[p] = row[f];
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_of_a_sum_constraint() {
        // x0 + x1 + x2 = 0
        let basis = null_space(&[vec![true, true, true]], 3);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(!(v[0] ^ v[1] ^ v[2]));
        }
        assert_eq!(rank(&basis, 3), 2);
    }

    #[test]
    fn rank_detects_dependence() {
        let v = vec![vec![true, false, true], vec![false, true, true], vec![true, true, false]];
        assert_eq!(rank(&v, 3), 2);
    }
}
