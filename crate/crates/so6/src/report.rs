use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write;

use rayon::prelude::*;
use solvgeom_curvature::einstein_verdict;

use crate::margin::sectional_range;
use crate::{angle_to_centralizer, bracket_angle, w_of, FamilyPoint, Result, So6Error};

pub const REPORT_HEADER: &str = "r,s,t,einstein_residual,cos_centralizer,cos_bracket,min_sectional,max_sectional";

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyRow {
    pub r: f64,
    pub s: f64,
    pub t: f64,
    pub einstein_residual: f64,
    pub cos_centralizer: f64,
    /// `None` where `[W, W] = 0`.
    pub cos_bracket: Option<f64>,
    pub min_sectional: f64,
    pub max_sectional: f64,
}

/// Representatives of `RP^2` on the closed upper hemisphere: `t = cos(theta)`,
/// `(r, s) = sin(theta) (cos(phi), sin(phi))` with `theta` in `res` steps over
/// `[0, pi/2]`. The pole is a single point, the equator uses `phi` in
/// `[0, pi)` and other latitudes `phi` in `[0, 2 pi)`, each with `2 res`
/// samples over the full circle.
pub fn family_grid(res: usize) -> Result<Vec<(f64, f64, f64)>> {
    if res < 2 {
        return Err(So6Error::GridTooSmall);
    }
    let mut out = vec![(0.0, 0.0, 1.0)];
    let per_circle = 2 * res;
    for i in 1..res {
        let theta = FRAC_PI_2 * i as f64 / (res - 1) as f64;
        let equator = i == res - 1;
        let count = if equator { per_circle / 2 } else { per_circle };
        for j in 0..count {
            let phi = 2.0 * PI * j as f64 / per_circle as f64;
            let t = if equator { 0.0 } else { theta.cos() };
            out.push((theta.sin() * phi.cos(), theta.sin() * phi.sin(), t));
        }
    }
    Ok(out)
}

/// Extremes of sampled sectional curvature of the solvmanifold of `point`.
pub fn sample_sectional_range(point: &FamilyPoint, samples: usize, seed: u64) -> (f64, f64) {
    sectional_range(point, samples, seed)
}

pub fn family_report(res: usize, sectional_samples: usize, seed: u64) -> Result<Vec<FamilyRow>> {
    let grid = family_grid(res)?;
    grid.par_iter()
        .enumerate()
        .map(|(idx, &(r, s, t))| {
            let point = w_of(r, s, t)?;
            let verdict = einstein_verdict(&point.solvmanifold(), solvgeom_algebra::tol::EINSTEIN);
            let cos_bracket = match bracket_angle(&point) {
                Ok(c) => Some(c),
                Err(So6Error::BracketVanishes) => None,
                Err(e) => return Err(e),
            };
            let (min_sectional, max_sectional) =
                sectional_range(&point, sectional_samples, seed.wrapping_add(idx as u64));
            Ok(FamilyRow {
                r: point.r,
                s: point.s,
                t: point.t,
                einstein_residual: verdict.residual,
                cos_centralizer: angle_to_centralizer(&point),
                cos_bracket,
                min_sectional,
                max_sectional,
            })
        })
        .collect()
}

/// CSV text with a fixed header; an undefined bracket angle is an empty
/// field.
pub fn family_report_csv(rows: &[FamilyRow]) -> String {
    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for row in rows {
        let bracket = row.cos_bracket.map(|c| format!("{c:.12}")).unwrap_or_default();
        writeln!(
            out,
            "{:.12},{:.12},{:.12},{:.3e},{:.12},{},{:.12},{:.12}",
            row.r + 0.0,
            row.s + 0.0,
            row.t + 0.0,
            row.einstein_residual,
            row.cos_centralizer,
            bracket,
            row.min_sectional,
            row.max_sectional
        )
        .expect("writing to a String cannot fail");
    }
    out
}
