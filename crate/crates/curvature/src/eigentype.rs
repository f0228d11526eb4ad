use nalgebra::DMatrix;
use solvgeom_algebra::{AlgebraError, MetricLieAlgebra};

use crate::{mean_curvature, CurvatureError, Result};

/// Largest denominator accepted when rationalizing eigenvalue ratios.
const MAX_DENOMINATOR: u64 = 64;

/// Integer-normalized spectrum of `ad(H)` on the nilradical.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueType {
    /// Distinct eigenvalues of `ad(scale * H)` on `n`: coprime, ascending.
    pub eigenvalues: Vec<u64>,
    pub multiplicities: Vec<usize>,
    pub scale: f64,
}

/// Eigenvalue type of a decorated algebra. `tol` bounds both the imaginary
/// parts and the distance of each ratio from its rational approximation,
/// relative to the largest eigenvalue.
pub fn eigenvalue_type(alg: &MetricLieAlgebra, tol: f64) -> Result<EigenvalueType> {
    let dec = alg.decoration().ok_or(AlgebraError::DecorationMissing)?;
    let n = &dec.n_indices;
    let ad = alg.ad_matrix(&mean_curvature(alg))?;
    let block = DMatrix::from_fn(n.len(), n.len(), |r, c| ad[(n[r], n[c])]);
    let spectrum = block.complex_eigenvalues();
    let scale = spectrum.iter().map(|z| z.norm()).fold(0.0_f64, f64::max);
    let mut values = Vec::with_capacity(spectrum.len());
    for z in spectrum.iter() {
        if z.im.abs() > tol * scale.max(1.0) {
            return Err(CurvatureError::NonRealEigenvalue { re: z.re, im: z.im });
        }
        if !(z.re > tol * scale.max(1.0)) {
            return Err(CurvatureError::NonPositiveEigenvalue(z.re));
        }
        values.push(z.re);
    }
    values.sort_by(f64::total_cmp);

    let mut clusters: Vec<(f64, usize)> = Vec::new();
    for v in values {
        match clusters.last_mut() {
            Some((mean, count)) if (v - *mean).abs() <= tol * scale => {
                *mean = (*mean * *count as f64 + v) / (*count + 1) as f64;
                *count += 1;
            }
            _ => clusters.push((v, 1)),
        }
    }

    let base = clusters[0].0;
    let mut fractions = Vec::with_capacity(clusters.len());
    for &(v, _) in &clusters {
        let ratio = v / base;
        let (p, q) = best_rational(ratio, MAX_DENOMINATOR);
        if (ratio - p as f64 / q as f64).abs() > tol * ratio.max(1.0) {
            return Err(CurvatureError::IrrationalRatio(ratio));
        }
        fractions.push((p, q));
    }
    let lcm = fractions.iter().fold(1, |acc, &(_, q)| acc / gcd(acc, q) * q);
    let mut ints: Vec<u64> = fractions.iter().map(|&(p, q)| p * (lcm / q)).collect();
    let g = ints.iter().fold(0, |acc, &m| gcd(acc, m));
    for m in &mut ints {
        *m /= g;
    }
    Ok(EigenvalueType {
        scale: ints[0] as f64 / base,
        eigenvalues: ints,
        multiplicities: clusters.iter().map(|c| c.1).collect(),
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Closest continued-fraction convergent of `x > 0` with denominator at most
/// `max_den`.
fn best_rational(x: f64, max_den: u64) -> (u64, u64) {
    let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 0u64);
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        if a > 1e15 {
            break;
        }
        let a = a as u64;
        let (p2, q2) = (a * p1 + p0, a * q1 + q0);
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = rest - a as f64;
        if frac < 1e-12 {
            break;
        }
        rest = 1.0 / frac;
    }
    if q1 == 0 {
        (x.round() as u64, 1)
    } else {
        (p1, q1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convergents() {
        assert_eq!(best_rational(2.0, 64), (2, 1));
        assert_eq!(best_rational(1.5, 64), (3, 2));
        assert_eq!(best_rational(0.5 + 1e-13, 64), (1, 2));
        let (p, q) = best_rational(std::f64::consts::SQRT_2, 64);
        assert!(q <= 64 && (p as f64 / q as f64 - std::f64::consts::SQRT_2).abs() > 1e-5);
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 5), 5);
    }
}
