use solvgeom_algebra::tol;
use solvgeom_symmetric::{
    bracket_table, build_sl_nh, build_sl_nr, build_so_nh, build_so_pq, build_sp_pq, build_su_pq, build_type_iv_sl,
    einstein_preservation_check, enumerate_twists, named_twist_sl_nh, named_twist_so_nh, restricted_height_twist,
    simple_roots, sl_nh_witness, so_nh_witness, table_mismatch, twist, twist_closure_check, type_iv_twist,
    type_iv_witness, wa_twist, wa_witness, RootDecoratedAlgebra, Space, TwistAssignment, WitnessPair,
};

use crate::verify::algebra_checks;
use crate::{num, BuildArgs, Produced, Report, SpaceArgs, SpaceKind, Status, TableArgs, UsageError};

/// Smallest sectional curvature accepted as positive for a witness plane.
const WITNESS_MARGIN: f64 = 1e-6;

fn need(v: Option<usize>, name: &str, space: SpaceKind) -> Result<usize, UsageError> {
    v.ok_or_else(|| UsageError(format!("--{name} is required for {space:?}")))
}

pub(crate) fn build_space(args: &SpaceArgs) -> Result<RootDecoratedAlgebra, UsageError> {
    let k = args.space;
    let alg = match k {
        SpaceKind::SoPq => build_so_pq(need(args.p, "p", k)?, need(args.q, "q", k)?),
        SpaceKind::SuPq => build_su_pq(need(args.p, "p", k)?, need(args.q, "q", k)?),
        SpaceKind::SpPq => build_sp_pq(need(args.p, "p", k)?, need(args.q, "q", k)?),
        SpaceKind::SoNH => build_so_nh(need(args.n, "n", k)?),
        SpaceKind::SlNH => build_sl_nh(need(args.n, "n", k)?),
        SpaceKind::TypeIvSl => build_type_iv_sl(need(args.n, "n", k)?),
        SpaceKind::SlNR => build_sl_nr(need(args.n, "n", k)?),
    };
    Ok(alg?)
}

fn is_normal_real_form(space: Space) -> bool {
    match space {
        Space::SoPq { p, q } => q <= p + 1,
        Space::SlNR { .. } => true,
        _ => false,
    }
}

enum TwistRequest {
    Assignment(TwistAssignment, Option<WitnessPair>),
    Enumerate,
}

fn parse_int(s: &str) -> Result<u128, UsageError> {
    let parsed = if let Some(hex) = s.strip_prefix("0x") {
        u128::from_str_radix(hex, 16)
    } else if let Some(bin) = s.strip_prefix("0b") {
        u128::from_str_radix(bin, 2)
    } else {
        s.parse()
    };
    parsed.map_err(|e| UsageError(format!("invalid number {s:?}: {e}")))
}

/// The witness pair for a named twist, built on the twisted algebra.
fn witness_for(twisted: &RootDecoratedAlgebra, wa: Option<usize>) -> Option<WitnessPair> {
    match (twisted.space(), wa) {
        (Space::SoPq { .. } | Space::SuPq { .. } | Space::SpPq { .. }, Some(a)) => wa_witness(twisted, a).ok(),
        (Space::SoNH { .. }, None) => so_nh_witness(twisted, 1).ok(),
        (Space::SlNH { .. }, None) => sl_nh_witness(twisted, 1, 2, 3).ok(),
        (Space::TypeIvSl { .. }, None) => type_iv_witness(twisted).ok(),
        _ => None,
    }
}

fn parse_twist(alg: &RootDecoratedAlgebra, spec: &str) -> Result<Option<TwistRequest>, UsageError> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let named = |t: TwistAssignment, wa: Option<usize>| -> Result<Option<TwistRequest>, UsageError> {
        let twisted = twist(alg, &t).ok();
        let w = twisted.as_ref().and_then(|tw| witness_for(tw, wa));
        Ok(Some(TwistRequest::Assignment(t, w)))
    };
    match kind {
        "none" => Ok(None),
        "enumerate" => Ok(Some(TwistRequest::Enumerate)),
        "paper" => match alg.space() {
            Space::SoPq { .. } | Space::SuPq { .. } | Space::SpPq { .. } => named(wa_twist(alg, 1)?, Some(1)),
            Space::SoNH { .. } => named(named_twist_so_nh(alg)?, None),
            Space::SlNH { .. } => named(named_twist_sl_nh(alg)?, None),
            Space::TypeIvSl { .. } => named(type_iv_twist(alg)?, None),
            other => Err(UsageError(format!("no named twist for {other}"))),
        },
        "wa" => {
            let a = parse_int(arg)? as usize;
            named(wa_twist(alg, a)?, Some(a))
        }
        "rh" => {
            let subset = arg
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| parse_int(s).map(|v| v as usize))
                .collect::<Result<Vec<_>, _>>()?;
            let t = restricted_height_twist(alg, &simple_roots(alg), &subset)?;
            Ok(Some(TwistRequest::Assignment(t, None)))
        }
        "bits" => {
            let mask = parse_int(arg)?;
            let m = alg.n_indices().len();
            if m < 128 && mask >> m != 0 {
                return Err(UsageError(format!("mask {arg} has bits beyond the {m} nilradical vectors")));
            }
            let bits: Vec<bool> = (0..m).map(|i| i < 128 && mask >> i & 1 == 1).collect();
            Ok(Some(TwistRequest::Assignment(TwistAssignment::from_n_bits(alg, &bits)?, None)))
        }
        _ => Err(UsageError(format!("unknown twist {spec:?}; expected none, paper, wa:<a>, rh:<i,..>, bits:<mask> or enumerate"))),
    }
}

fn twist_checks(report: &mut Report, alg: &RootDecoratedAlgebra, t: &TwistAssignment, witness: Option<WitnessPair>, tol_ric: f64) {
    let tags: Vec<&str> = t.twisted_indices().iter().map(|&i| alg.tags()[i].as_str()).collect();
    report.info("twist.vectors", if tags.is_empty() { "-".to_string() } else { tags.join(",") });
    let closure = match twist_closure_check(alg, t) {
        Ok(c) => c,
        Err(e) => {
            report.check("twist.closure", false, e.to_string(), "twisted span is a real subalgebra");
            return;
        }
    };
    report.check("twist.closure", closure.ok, format!("{} violations", closure.violations.len()), "twisted span is a real subalgebra");
    if !closure.ok {
        return;
    }
    match einstein_preservation_check(alg, t, tol_ric) {
        Ok(p) => {
            report.bound("twist.ricci", p.residual, tol_ric, "twisted and untwisted Ricci tensors agree");
            report.check("twist.einstein", p.both_einstein, format!("{} {}", num(p.lambda), num(p.lambda_twisted)), "both algebras Einstein");
        }
        Err(e) => report.check("twist.ricci", false, e.to_string(), "twisted and untwisted Ricci tensors agree"),
    }
    let involution = twist(alg, t).and_then(|tw| twist(&tw, t)).map(|back| back == *alg).unwrap_or(false);
    report.check("twist.involution", involution, involution.to_string(), "twisting twice is the identity");
    if let Some(w) = witness {
        let twisted = twist(alg, t).expect("closure checked");
        match w.sectional(&twisted) {
            Ok(k) => report.push(
                "witness.sectional",
                if k > WITNESS_MARGIN { Status::Pass } else { Status::Fail },
                num(k),
                format!("> {}", num(WITNESS_MARGIN)),
                "explicit plane of positive curvature",
            ),
            Err(e) => report.check("witness.sectional", false, e.to_string(), "explicit plane of positive curvature"),
        }
    }
}

fn enumerate_checks(report: &mut Report, alg: &RootDecoratedAlgebra, tol_ric: f64) -> Result<(), UsageError> {
    let e = enumerate_twists(alg)?;
    report.info("twists.solutions", e.solutions.len().to_string());
    report.info("twists.restricted_height_rank", e.restricted_height_rank.to_string());
    let classes = e.class_count();
    if is_normal_real_form(alg.space()) {
        report.push(
            "twists.classes",
            if classes == 1 { Status::Pass } else { Status::Fail },
            classes.to_string(),
            "expected 1",
            "normal real form admits only restricted-height twists",
        );
    } else {
        report.info("twists.classes", classes.to_string());
    }
    for (c, rep) in e.representatives.iter().enumerate() {
        let tags: Vec<&str> = rep.twisted_indices().iter().map(|&i| alg.tags()[i].as_str()).collect();
        report.info(&format!("twists.rep{c}"), tags.join(","));
        let p = einstein_preservation_check(alg, rep, tol_ric)?;
        report.bound(&format!("twists.rep{c}.ricci"), p.residual, tol_ric, "twisted and untwisted Ricci tensors agree");
    }
    Ok(())
}

fn golden_check(report: &mut Report, table: &str, path: &std::path::Path) -> Result<(), UsageError> {
    let golden = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    match table_mismatch(table, &golden) {
        None => report.check("table.golden", true, "match", "bracket table of the nilradical"),
        Some(m) => report.check(
            "table.golden",
            false,
            format!("line {}: expected {:?}, got {:?}", m.line, m.expected.unwrap_or_default(), m.got.unwrap_or_default()),
            "bracket table of the nilradical",
        ),
    }
    Ok(())
}

pub(crate) fn build(args: &BuildArgs, twist_required: bool, echo: String) -> Result<Produced, UsageError> {
    let alg = build_space(&args.space)?;
    let request = match args.twist.as_deref() {
        Some(spec) => parse_twist(&alg, spec)?,
        None if twist_required => return Err(UsageError("--twist is required".into())),
        None => None,
    };
    let tol_ric = args.common.tol.unwrap_or(tol::EXACT);
    let mut report = Report::new(echo, None);
    report.info("space", alg.space().to_string());
    report.info("dim", alg.dim().to_string());
    report.info("rank", alg.rank().to_string());
    report.info("norm_constant", num(alg.norm_constant()));
    let roots: Vec<String> = simple_roots(&alg).iter().map(|r| format!("{r:?}")).collect();
    report.info("simple_roots", roots.join(" ").replace(' ', ""));
    algebra_checks(&mut report, alg.base(), tol::EINSTEIN);
    let bc = alg.basis_conditions();
    let worst = bc.root_vector_residual.max(bc.orthonormality_residual).max(bc.perpendicularity_residual);
    report.check("basis", bc.hold(tol::EXACT), format!("{} monomial={}", num(worst), bc.monomial), "orthonormal root-vector basis");
    match request {
        Some(TwistRequest::Assignment(t, w)) => twist_checks(&mut report, &alg, &t, w, tol_ric),
        Some(TwistRequest::Enumerate) => enumerate_checks(&mut report, &alg, tol_ric)?,
        None => {}
    }
    if let Some(path) = &args.golden {
        golden_check(&mut report, &bracket_table(&alg, None)?, path)?;
    }
    Ok(Produced { report, data: None })
}

pub(crate) fn table(args: &TableArgs, echo: String) -> Result<Produced, UsageError> {
    let alg = build_space(&args.space)?;
    let table = bracket_table(&alg, None)?;
    let mut report = Report::new(echo, None);
    report.info("space", alg.space().to_string());
    report.info("rows", alg.n_indices().len().to_string());
    if let Some(path) = &args.golden {
        golden_check(&mut report, &table, path)?;
    }
    Ok(Produced { report, data: Some(table) })
}
