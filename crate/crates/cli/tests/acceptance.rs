//! Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
//!
//! The process fails when a criterion outside `KNOWN_FAILURES` fails.

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvgeom_algebra::{tol, MetricLieAlgebra};
use solvgeom_carnot::{
    build_solvmanifold, classify_so4, einstein_conditions, left_mult, right_mult, search_uniform, skew_basis,
    skew_inner, DataTriple, SearchOptions,
};
use solvgeom_curvature::{einstein_verdict, rank_one_reduction, ricci};
use solvgeom_so6::{
    angle_to_centralizer, bracket_angle, bracket_angle_closed_form, bracket_angle_corrected, centralizer_in_so6,
    negative_curvature_margin, w_of, MarginOptions,
};
use solvgeom_symmetric::*;

/// Criterion 5 compares the printed bracket-angle closed form, which is
/// wrong where `t^2 + sqrt(2) st < 0`.
const KNOWN_FAILURES: &[usize] = &[5];

const SEED: u64 = 0xE1_5731;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(limit: Duration, elapsed: Duration) -> bool {
    elapsed < limit
}

fn rot_blocks(r: usize) -> DMatrix<f64> {
    let mut j = DMatrix::zeros(r, r);
    for b in 0..r / 2 {
        j[(2 * b + 1, 2 * b)] = 1.0;
        j[(2 * b, 2 * b + 1)] = -1.0;
    }
    j
}

fn unit_quaternion(i: usize) -> [f64; 4] {
    let mut q = [0.0; 4];
    q[i] = 1.0;
    q
}

fn block_diag(blocks: &[DMatrix<f64>]) -> DMatrix<f64> {
    let n: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut out = DMatrix::zeros(n, n);
    let mut at = 0;
    for b in blocks {
        out.view_mut((at, at), b.shape()).copy_from(b);
        at += b.nrows();
    }
    out
}

fn criterion_1() -> Outcome {
    let triple = DataTriple::new(2, vec![rot_blocks(2)]).unwrap();
    let alg = build_solvmanifold(&triple);
    let v = einstein_verdict(&alg, 1e-10);
    let ric = ricci(&alg);
    let (r, s) = (2.0, 1.0);
    // ric(A,A) = -(r+4s)/4; ric(X,X) = -(r+2s)/4 + S(X,X)/2 with S = sum j^2;
    // ric(Z,Z) = -(r+2s)/2 + r/4 |j(Z)|^2.
    let a = -(r + 4.0 * s) / 4.0;
    let sq = &triple.j_mats()[0] * &triple.j_mats()[0];
    let x = -(r + 2.0 * s) / 4.0 + 0.5 * sq[(0, 0)];
    let z = -(r + 2.0 * s) / 2.0 + r / 4.0 * skew_inner(&triple.j_mats()[0], &triple.j_mats()[0]);
    let target = -1.5;
    let ok = v.is_einstein
        && v.residual <= 1e-10
        && (v.lambda - target).abs() <= 1e-10
        && [a, x, z].iter().all(|f| (f - target).abs() <= 1e-12)
        && (ric[(0, 0)] - a).abs() <= 1e-10
        && (1..=2).all(|i| (ric[(i, i)] - x).abs() <= 1e-10)
        && (ric[(3, 3)] - z).abs() <= 1e-10;
    outcome(ok, format!("lambda = {}, residual = {:.1e}, closed forms {a}, {x}, {z}", v.lambda, v.residual))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut base: Vec<DataTriple> = Vec::new();
    for n in 2..=5 {
        base.push(DataTriple::new(2 * (n - 1), vec![rot_blocks(2 * (n - 1))]).unwrap());
    }
    for s in 1..=3 {
        base.push(DataTriple::new(4, (1..=s).map(|i| left_mult(unit_quaternion(i))).collect()).unwrap());
        base.push(DataTriple::new(4, (1..=s).map(|i| right_mult(unit_quaternion(i))).collect()).unwrap());
        let doubled = (1..=s).map(|i| block_diag(&[left_mult(unit_quaternion(i)), left_mult(unit_quaternion(i))])).collect();
        base.push(DataTriple::new(8, doubled).unwrap());
    }
    base.push(DataTriple::new(3, skew_basis(3)).unwrap());
    for copies in 2..=3 {
        let diag = skew_basis(3).iter().map(|l| block_diag(&vec![l.clone(); copies])).collect();
        base.push(DataTriple::new(3 * copies, diag).unwrap());
    }
    let mut battery: Vec<DataTriple> = base.clone();
    for t in &base {
        let r = t.r();
        let q = DMatrix::from_fn(r, r, |_, _| rng.random_range(-1.0..1.0)).qr().q();
        battery.push(DataTriple::new(r, t.j_mats().iter().map(|j| q.transpose() * j * &q).collect()).unwrap());
        for eps in [1e-3, 0.05, 0.3] {
            let noisy = t
                .j_mats()
                .iter()
                .map(|j| {
                    let m = DMatrix::from_fn(r, r, |_, _| rng.random_range(-eps..eps));
                    j + (&m - m.transpose()) * 0.5
                })
                .collect();
            battery.push(DataTriple::new(r, noisy).unwrap());
        }
        battery.push(DataTriple::new(r, t.j_mats().iter().map(|j| j * 1.1).collect()).unwrap());
    }
    let mut einstein = 0;
    let mut disagreements = 0;
    for t in &battery {
        let c = einstein_conditions(t).unwrap();
        let v = einstein_verdict(&build_solvmanifold(t), 1e-9);
        if c.holds(1e-9) != v.is_einstein {
            disagreements += 1;
        }
        einstein += usize::from(v.is_einstein);
    }
    let ok = battery.len() >= 50 && disagreements == 0;
    outcome(ok, format!("{} triples, {einstein} Einstein, {disagreements} disagreements", battery.len()))
}

fn criterion_3() -> Outcome {
    let opts = SearchOptions { trials: 200, seed: SEED, ..Default::default() };
    let c = classify_so4(&opts).unwrap();
    let counts = c.counts();
    let expected = vec![(1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)];
    outcome(counts == expected, format!("class counts {counts:?}"))
}

fn criterion_4() -> Outcome {
    let opts = SearchOptions { trials: 500, seed: SEED, ..Default::default() };
    let mut ok = true;
    let mut parts = Vec::new();
    for (r, s) in [(3, 1), (3, 2), (5, 1), (5, 2)] {
        let best = search_uniform(r, s, &opts).unwrap().best_residual;
        ok &= best >= 0.05;
        parts.push(format!("({r},{s}) best {best:.3}"));
    }
    outcome(ok, format!("evidence only: {}", parts.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut points = Vec::new();
    while points.len() < 100 {
        let v: [f64; 3] = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if norm > 0.1 && norm <= 1.0 {
            points.push(w_of(v[0], v[1], v[2]).unwrap());
        }
    }
    let mut sum_sq = 0.0_f64;
    let mut cent_angle = 0.0_f64;
    let mut printed = 0.0_f64;
    let mut printed_misses = 0;
    let mut corrected = 0.0_f64;
    let mut dims_ok = true;
    for p in &points {
        sum_sq = sum_sq.max(einstein_conditions(&p.triple()).unwrap().cond_ii);
        cent_angle = cent_angle.max((angle_to_centralizer(p) - p.t.abs()).abs());
        let numeric = bracket_angle(p).unwrap();
        let dev = (bracket_angle_closed_form(p.r, p.s, p.t) - numeric).abs();
        printed = printed.max(dev);
        printed_misses += usize::from(dev > 1e-6);
        corrected = corrected.max((bracket_angle_corrected(p.r, p.s, p.t) - numeric).abs());
        dims_ok &= centralizer_in_so6(p).len() == 1;
    }
    // The locus t^2 = (r^2 + s^2)/2.
    for k in 0..12 {
        let phi = std::f64::consts::PI * k as f64 / 6.0 + 0.1;
        let rho = (2.0f64 / 3.0).sqrt();
        let p = w_of(rho * phi.cos(), rho * phi.sin(), (1.0f64 / 3.0).sqrt()).unwrap();
        dims_ok &= centralizer_in_so6(&p).len() == 1;
    }
    let ok = sum_sq <= 1e-10 && cent_angle <= 1e-9 && printed <= 1e-6 && dims_ok;
    outcome(
        ok,
        format!(
            "sum D_i^2 + 3 Id {sum_sq:.1e}, centralizer angle {cent_angle:.1e}, centralizer dims ok {dims_ok}, \
             printed closed form off by up to {printed:.3} at {printed_misses}/100 points, corrected form {corrected:.1e}"
        ),
    )
}

fn criterion_6() -> Outcome {
    let point = w_of(1.0, 0.0, 0.0).unwrap();
    let m = negative_curvature_margin(&point, &MarginOptions { seed: SEED, ..Default::default() });
    outcome(
        m.min_margin > 0.0 && m.max_sectional < 0.0,
        format!("evidence only: min margin {:.4}, sectional in [{:.4}, {:.4}]", m.min_margin, m.min_sectional, m.max_sectional),
    )
}

fn criterion_7() -> Outcome {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../tables");
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, alg) in [("so4H", build_so_nh(4)), ("so5H", build_so_nh(5)), ("sl3H", build_sl_nh(3))] {
        let golden = std::fs::read_to_string(format!("{root}/{name}.txt")).unwrap();
        let table = bracket_table(&alg.unwrap(), None).unwrap();
        let m = table_mismatch(&table, &golden);
        ok &= m.is_none() && table == golden;
        parts.push(format!("{name} {}", if m.is_none() { "match" } else { "mismatch" }));
    }
    outcome(ok, parts.join(", "))
}

fn theorem_cases() -> Vec<(String, RootDecoratedAlgebra, TwistAssignment)> {
    let mut out = Vec::new();
    let mut add = |alg: RootDecoratedAlgebra, t: TwistAssignment| out.push((alg.space().to_string(), alg, t));
    let so13 = build_so_pq(1, 3).unwrap();
    add(so13.clone(), wa_twist(&so13, 1).unwrap());
    let so24 = build_so_pq(2, 4).unwrap();
    add(so24.clone(), wa_twist(&so24, 1).unwrap());
    let su13 = build_su_pq(1, 3).unwrap();
    add(su13.clone(), wa_twist(&su13, 1).unwrap());
    let so4h = build_so_nh(4).unwrap();
    add(so4h.clone(), named_twist_so_nh(&so4h).unwrap());
    let so5h = build_so_nh(5).unwrap();
    add(so5h.clone(), named_twist_so_nh(&so5h).unwrap());
    let sl3h = build_sl_nh(3).unwrap();
    add(sl3h.clone(), named_twist_sl_nh(&sl3h).unwrap());
    let sl3c = build_type_iv_sl(3).unwrap();
    add(sl3c.clone(), type_iv_twist(&sl3c).unwrap());
    out
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    let mut worst = 0.0_f64;
    for (name, alg, t) in theorem_cases() {
        let closes = twist_closure_check(&alg, &t).unwrap().ok;
        let r = einstein_preservation_check(&alg, &t, 1e-10).unwrap();
        if !(closes && r.ric_match && r.both_einstein && r.residual <= 1e-10) {
            ok = false;
            eprintln!("  criterion 8: {name} closure {closes} {r:?}");
        }
        worst = worst.max(r.residual);
    }
    outcome(ok, format!("7 twists, max Ricci difference {worst:.1e}"))
}

fn criterion_9() -> Outcome {
    let margin = 1e-6;
    let mut parts = Vec::new();
    let mut ok = true;
    let mut check = |name: &str, alg: &RootDecoratedAlgebra, w: WitnessPair| {
        let k = w.sectional(alg).unwrap();
        ok &= k > margin;
        parts.push(format!("{name} K = {k:.4}"));
    };
    let so24 = build_so_pq(2, 4).unwrap();
    let tw = twist(&so24, &wa_twist(&so24, 1).unwrap()).unwrap();
    check("so(2,4)", &tw, wa_witness(&tw, 1).unwrap());
    let so6h = build_so_nh(6).unwrap();
    let tw = twist(&so6h, &named_twist_so_nh(&so6h).unwrap()).unwrap();
    check("so(6,H)", &tw, so_nh_witness(&tw, 1).unwrap());
    let sl3h = build_sl_nh(3).unwrap();
    let tw = twist(&sl3h, &named_twist_sl_nh(&sl3h).unwrap()).unwrap();
    check("sl(3,H)", &tw, sl_nh_witness(&tw, 1, 2, 3).unwrap());
    let sl3c = build_type_iv_sl(3).unwrap();
    let tw = twist(&sl3c, &type_iv_twist(&sl3c).unwrap()).unwrap();
    check("sl(3,C)", &tw, type_iv_witness(&tw).unwrap());
    outcome(ok, parts.join(", "))
}

fn criterion_10() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for alg in [build_so_pq(2, 2).unwrap(), build_so_pq(2, 3).unwrap(), build_sl_nr(3).unwrap()] {
        let classes = enumerate_twists(&alg).unwrap().class_count();
        ok &= classes == 1;
        parts.push(format!("{} {classes}", alg.space()));
    }
    outcome(ok, format!("twist classes: {}", parts.join(", ")))
}

fn criterion_11() -> Outcome {
    let mut builds: Vec<RootDecoratedAlgebra> = Vec::new();
    for (p, q) in [(1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (3, 3), (3, 5)] {
        builds.push(build_so_pq(p, q).unwrap());
        builds.push(build_su_pq(p, q).unwrap());
        builds.push(build_sp_pq(p, q).unwrap());
    }
    for n in 4..=7 {
        builds.push(build_so_nh(n).unwrap());
    }
    for n in 2..=4 {
        builds.push(build_sl_nh(n).unwrap());
        builds.push(build_type_iv_sl(n).unwrap());
        builds.push(build_sl_nr(n).unwrap());
    }
    let mut others: Vec<MetricLieAlgebra> = vec![
        build_solvmanifold(&DataTriple::new(2, vec![rot_blocks(2)]).unwrap()),
        build_solvmanifold(&DataTriple::new(3, skew_basis(3)).unwrap()),
        w_of(1.0, 0.0, 0.0).unwrap().solvmanifold(),
        w_of(0.3, -0.5, 0.8).unwrap().solvmanifold(),
    ];
    let mut involution = true;
    let mut reduction = 0.0_f64;
    let mut reduction_verdicts = true;
    for (_, alg, t) in theorem_cases() {
        let tw = twist(&alg, &t).unwrap();
        involution &= twist(&tw, &t).unwrap() == alg;
        builds.push(tw);
    }
    for alg in &builds {
        if alg.rank() >= 2 {
            let full = einstein_verdict(alg.base(), tol::EINSTEIN);
            let reduced_alg = rank_one_reduction(alg.base()).unwrap();
            let reduced = einstein_verdict(&reduced_alg, tol::EINSTEIN);
            reduction_verdicts &= reduced.is_einstein == full.is_einstein;
            reduction = reduction.max((reduced.lambda - full.lambda).abs());
            others.push(reduced_alg);
        }
    }
    let jacobi = builds.iter().map(|a| a.base().jacobi_residual()).chain(others.iter().map(|a| a.jacobi_residual())).fold(0.0, f64::max);
    let ok = jacobi <= tol::EXACT && involution && reduction_verdicts && reduction <= 1e-9;
    outcome(
        ok,
        format!(
            "{} algebras, max Jacobi {jacobi:.1e}, involution exact {involution}, rank-one reduction lambda shift {reduction:.1e}",
            builds.len() + others.len()
        ),
    )
}

/// Number, title, time limit in seconds, check.
type Criterion = (usize, &'static str, u64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "Einstein constant of the complex hyperbolic plane", 1, criterion_1),
        (2, "Einstein conditions iff Einstein verdict", 10, criterion_2),
        (3, "so(4) uniform subspace classification", 300, criterion_3),
        (4, "nonexistence evidence in so(3), so(5)", 300, criterion_4),
        (5, "so(6) family identities and angles", 60, criterion_5),
        (6, "negative curvature at W(1,0,0)", 120, criterion_6),
        (7, "bracket tables match golden files", 5, criterion_7),
        (8, "twists preserve the Ricci tensor", 30, criterion_8),
        (9, "positive-curvature witness planes", 5, criterion_9),
        (10, "normal real forms admit no new twists", 30, criterion_10),
        (11, "structural suites", 60, criterion_11),
    ];
    let mut unexpected = Vec::new();
    for (id, title, limit, f) in criteria {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let pass = result.pass && within(Duration::from_secs(limit), elapsed);
        println!(
            "criterion {id:>2} {}: {title} ({}; {:.2} s, limit {limit} s)",
            if pass { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64()
        );
        if !pass && !KNOWN_FAILURES.contains(&id) {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
