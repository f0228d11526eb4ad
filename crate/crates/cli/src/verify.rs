use nalgebra::DMatrix;
use solvgeom_algebra::{deserialize, iwasawa_check, tol, MetricLieAlgebra};
use solvgeom_carnot::{
    build_solvmanifold, classify_so4, einstein_conditions, equivalence_invariants, fingerprints_match, is_uniform,
    search_uniform, skew_basis, DataTriple, SearchOptions,
};
use solvgeom_curvature::{eigenvalue_type, einstein_verdict, ricci};

use crate::{ClassifyArgs, Common, Produced, Report, SearchArgs, Status, UsageError, VerifyArgs};

/// Validation, Iwasawa type, Einstein verdict and eigenvalue type.
pub(crate) fn algebra_checks(report: &mut Report, alg: &MetricLieAlgebra, einstein_tol: f64) {
    let v = alg.validate(tol::EXACT);
    report.bound("jacobi", v.jacobi_residual, tol::EXACT, "Jacobi identity");
    report.bound("antisymmetry", v.antisym_residual, tol::EXACT, "bracket antisymmetry");
    report.check("gram_positive", v.gram_min_eig > 0.0, crate::num(v.gram_min_eig), "inner product");
    if alg.decoration().is_some() {
        match iwasawa_check(alg, tol::EXACT) {
            Ok(iw) => {
                report.check("iwasawa.abelian", iw.cond_i, iw.cond_i.to_string(), "a is abelian");
                report.check("iwasawa.symmetric", iw.cond_ii, iw.cond_ii.to_string(), "ad(a) symmetric");
                report.check("iwasawa.positive", iw.cond_iii, crate::num(iw.witness_min_eig), "ad(A) positive on n");
            }
            Err(e) => report.check("iwasawa", false, e.to_string(), "Iwasawa type"),
        }
    }
    let verdict = einstein_verdict(alg, einstein_tol);
    report.bound("einstein", verdict.residual, einstein_tol, "Ric = lambda g");
    report.info("einstein.lambda", crate::num(verdict.lambda));
    if verdict.is_einstein && alg.decoration().is_some() {
        match eigenvalue_type(alg, 1e-8) {
            Ok(t) => {
                let mu: Vec<String> = t.eigenvalues.iter().map(u64::to_string).collect();
                let d: Vec<String> = t.multiplicities.iter().map(usize::to_string).collect();
                report.check("eigenvalue_type", true, format!("({};{})", mu.join(","), d.join(",")), "spectrum of ad(H) on n");
            }
            Err(e) => report.check("eigenvalue_type", false, e.to_string(), "spectrum of ad(H) on n"),
        }
    }
}

pub(crate) fn verify(args: &VerifyArgs, echo: String) -> Result<Produced, UsageError> {
    match args.target.as_str() {
        "complex-hyperbolic" => {
            if args.n < 2 {
                return Err(UsageError(format!("complex hyperbolic space needs n >= 2, got {}", args.n)));
            }
            let r = 2 * (args.n - 1);
            let mut j = DMatrix::zeros(r, r);
            for b in 0..r / 2 {
                j[(2 * b + 1, 2 * b)] = 1.0;
                j[(2 * b, 2 * b + 1)] = -1.0;
            }
            let triple = DataTriple::new(r, vec![j])?;
            let mut report = Report::new(echo, None);
            carnot_checks(&mut report, &triple, args.common.tol.unwrap_or(tol::EINSTEIN));
            Ok(Produced { report, data: None })
        }
        "carnot" => verify_carnot(args.r, args.s, args.trials, &args.common, echo),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{path}: {e}")))?;
            let alg = deserialize(&text).map_err(|e| UsageError(format!("{path}: {e}")))?;
            let mut report = Report::new(echo, None);
            report.info("dim", alg.dim().to_string());
            algebra_checks(&mut report, &alg, args.common.tol.unwrap_or(tol::EINSTEIN));
            Ok(Produced { report, data: None })
        }
    }
}

/// Einstein conditions on `j`, agreement with the Ricci computation and the
/// closed forms for the Ricci tensor on `A`, `v` and `z`.
fn carnot_checks(report: &mut Report, triple: &DataTriple, tol: f64) {
    let (r, s) = (triple.r(), triple.s());
    let alg = build_solvmanifold(triple);
    report.info("type", format!("(1,2;{r},{s})"));
    algebra_checks(report, &alg, tol);
    let (rf, sf) = (r as f64, s as f64);
    let ric = ricci(&alg);
    let sq = triple.j_mats().iter().fold(DMatrix::zeros(r, r), |acc, j| acc + j * j);
    let mut v_block = DMatrix::identity(r, r) * (-0.25 * (rf + 2.0 * sf)) + sq * 0.5;
    v_block -= ric.view((1, 1), (r, r));
    let mut z_err = 0.0_f64;
    for a in 0..s {
        for b in 0..s {
            let delta = if a == b { 1.0 } else { 0.0 };
            let jab = solvgeom_carnot::skew_inner(&triple.j_mats()[a], &triple.j_mats()[b]);
            let expected = -0.5 * (rf + 2.0 * sf) * delta + rf / 4.0 * jab;
            z_err = z_err.max((ric[(1 + r + a, 1 + r + b)] - expected).abs());
        }
    }
    report.bound("ricci.a", (ric[(0, 0)] + 0.25 * (rf + 4.0 * sf)).abs(), tol, "ric(A,A) = -(r+4s)/4");
    report.bound("ricci.v", v_block.amax(), tol, "ric on v from S = sum j^2");
    report.bound("ricci.z", z_err, tol, "ric on z from |j(Z)|^2");
    match einstein_conditions(triple) {
        Ok(c) => {
            report.bound("conditions.isometry", c.cond_i, tol, "j is an isometry onto its image");
            report.bound("conditions.scalar", c.cond_ii, tol, "sum of j(Z_k)^2 is scalar");
            let agree = c.holds(tol) == einstein_verdict(&alg, tol).is_einstein;
            report.check("conditions.agree", agree, agree.to_string(), "Einstein iff both conditions");
        }
        Err(e) => report.check("conditions", false, e.to_string(), "Einstein iff both conditions"),
    }
}

pub(crate) fn verify_carnot(r: usize, s: usize, trials: usize, common: &Common, echo: String) -> Result<Produced, UsageError> {
    let d = r * r.saturating_sub(1) / 2;
    if r < 2 || s == 0 || s > d {
        return Err(UsageError(format!("need r >= 2 and 1 <= s <= {d}, got r={r}, s={s}")));
    }
    let tol = common.tol.unwrap_or(tol::EINSTEIN);
    if s == d {
        let mut report = Report::new(echo, None);
        report.info("subspace", "so(r)");
        carnot_checks(&mut report, &DataTriple::new(r, skew_basis(r))?, tol);
        return Ok(Produced { report, data: None });
    }
    let seed = common.seed();
    let mut report = Report::new(echo, Some(seed));
    let found = search_uniform(r, s, &SearchOptions { trials, seed, ..Default::default() })?;
    match found.candidates.first() {
        Some((cand, residual)) => {
            report.push("subspace", Status::Evidence, crate::num(*residual), crate::num(tol::OPT), "best uniform subspace found by search");
            let ortho = cand.orthonormalized()?;
            carnot_checks(&mut report, &DataTriple::new(r, ortho.basis)?, tol.max(tol::OPT));
        }
        None => report.check("subspace", false, crate::num(found.best_residual), "no uniform subspace found by search"),
    }
    Ok(Produced { report, data: None })
}

pub(crate) fn search(args: &SearchArgs, echo: String) -> Result<Produced, UsageError> {
    let seed = args.common.seed();
    let tol_opt = args.common.tol.unwrap_or(tol::OPT);
    let opts = SearchOptions { trials: args.trials, seed, tol_opt, ..Default::default() };
    let found = search_uniform(args.r, args.s, &opts)?;
    let mut report = Report::new(echo, Some(seed));
    report.info("trials", args.trials.to_string());
    report.push("best_residual", Status::Evidence, crate::num(found.best_residual), crate::num(tol_opt), "descent on orthonormal frames");
    report.push("candidates", Status::Evidence, found.candidates.len().to_string(), "-", "restarts converging to a uniform subspace");
    let mut prints: Vec<Vec<f64>> = Vec::new();
    for (cand, _) in &found.candidates {
        let ok = is_uniform(cand, tol_opt)?;
        if !ok {
            report.check("candidate.uniform", false, "false", "certified after search");
            continue;
        }
        let fp = equivalence_invariants(cand)?;
        if !prints.iter().any(|p| fingerprints_match(p, &fp, tol_opt)) {
            prints.push(fp);
        }
    }
    let status = Status::Evidence;
    let anchor = if found.candidates.is_empty() { "no uniform subspace found" } else { "fingerprint classes among candidates" };
    report.push("classes", status, prints.len().to_string(), crate::num(tol_opt), anchor);
    Ok(Produced { report, data: None })
}

/// Class counts for s = 1..6 in so(4).
pub const SO4_COUNTS: [usize; 6] = [1, 2, 2, 2, 1, 1];

pub(crate) fn classify(args: &ClassifyArgs, echo: String) -> Result<Produced, UsageError> {
    let seed = args.common.seed();
    let tol_opt = args.common.tol.unwrap_or(tol::OPT);
    let opts = SearchOptions { trials: args.trials, seed, tol_opt, ..Default::default() };
    let classes = classify_so4(&opts)?;
    let mut report = Report::new(echo, Some(seed));
    for class in &classes.classes {
        let expected = SO4_COUNTS[class.s - 1];
        let status = if class.count() == expected { Status::Pass } else { Status::Fail };
        let anchor = if class.by_duality { "complement of the 6-s classes" } else { "search and fingerprint clustering" };
        report.push(format!("so4.s{}", class.s), status, class.count().to_string(), format!("expected {expected}"), anchor);
    }
    Ok(Produced { report, data: None })
}
