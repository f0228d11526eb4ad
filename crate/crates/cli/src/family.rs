use solvgeom_algebra::tol;
use solvgeom_so6::{bracket_angle_corrected, family_report, family_report_csv};

use crate::{num, FamilyArgs, Produced, Report, Status, UsageError};

pub(crate) fn report(args: &FamilyArgs, echo: String) -> Result<Produced, UsageError> {
    let seed = args.common.seed();
    let einstein_tol = args.common.tol.unwrap_or(tol::EINSTEIN);
    let rows = family_report(args.grid, args.samples, seed)?;
    let mut report = Report::new(echo, Some(seed));
    report.info("rows", rows.len().to_string());

    let einstein = rows.iter().map(|r| r.einstein_residual).fold(0.0, f64::max);
    report.bound("einstein", einstein, einstein_tol, "every W(r,s,t) gives an Einstein solvmanifold");
    let centralizer = rows.iter().map(|r| (r.cos_centralizer - r.t.abs()).abs()).fold(0.0, f64::max);
    report.bound("angle.centralizer", centralizer, tol::EINSTEIN, "cos angle(W, centralizer) = |t|");
    let bracket = rows
        .iter()
        .filter_map(|r| r.cos_bracket.map(|c| (c - bracket_angle_corrected(r.r, r.s, r.t)).abs()))
        .fold(0.0, f64::max);
    report.bound("angle.bracket", bracket, tol::OPT, "cos angle(W, [W,W]) against its closed form");
    let max_k = rows.iter().map(|r| r.max_sectional).fold(f64::NEG_INFINITY, f64::max);
    let min_k = rows.iter().map(|r| r.min_sectional).fold(f64::INFINITY, f64::min);
    report.push("sectional.min", Status::Evidence, num(min_k), "-", "random planes per grid point");
    report.push("sectional.max", Status::Evidence, num(max_k), "-", "random planes per grid point");
    Ok(Produced { report, data: Some(family_report_csv(&rows)) })
}
