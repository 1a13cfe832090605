//! Acceptance suite: one PASS/FAIL line per criterion with its tolerance
//! and wall-clock time against the limit.

use std::time::{Duration, Instant};

use isotwist::additive::AdditivePoly;
use isotwist::analysis::{
    check_gdf, eqiv_conditions, independence_certificate, search_integral_points, IsoClass, SearchHit,
};
use isotwist::classgroup::{class_rank_witness, l_polynomial, ClassFamily};
use isotwist::constructions::{
    artin_schreier_twist, distinct_orbits, hermitian_identity_check, main_point_quadratic, main_points_cubic,
    main_points_quadratic, orthogonal_group, scaled, tau_points, translates, Construction, TauKind,
};
use isotwist::curves::{FPoint, TwistCurve};
use isotwist::delsarte::{registry, LineOutcome};
use isotwist::{Error, Field, Poly};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn prime(q: u64) -> Field {
    Field::prime(q).unwrap()
}

fn x3_minus_x(f: &Field) -> Poly {
    Poly::from_terms(f, &[(3, 1), (1, -1)])
}

fn tau_odd(n: u32) -> usize {
    (1..=n).filter(|k| n.is_multiple_of(*k) && k % 2 == 1).count()
}

fn check_family(pts: &[Construction], expected: usize, deg: impl Fn(u32) -> (usize, usize)) -> Result<(), String> {
    ensure(pts.len() == expected, || format!("{} points, expected {expected}", pts.len()))?;
    let curve = &pts[0].curve;
    for c in pts {
        let k: u32 = c.label[2..].parse().unwrap();
        ensure(c.verified(), || format!("{} off curve", c.label))?;
        ensure(c.point.is_integral(), || format!("{} not integral", c.label))?;
        ensure(c.separable == Some(true), || format!("{} not separable", c.label))?;
        ensure(&c.curve == curve, || format!("{} on another curve", c.label))?;
        let (dx, dy) = deg(k);
        ensure(c.degrees() == (Some(dx), Some(dy)), || format!("{} degrees {:?}, expected ({dx}, {dy})", c.label, c.degrees()))?;
    }
    let points: Vec<FPoint> = pts.iter().map(|c| c.point.clone()).collect();
    let orbits = distinct_orbits(curve, &points).map_err(e2s)?;
    ensure(orbits == pts.len(), || format!("{orbits} orbits for {} points", pts.len()))
}

fn main_points() -> Outcome {
    let mut total = 0;
    for (q, n) in [(3u64, 3u32), (7, 1), (3, 5)] {
        let pts = main_points_quadratic(&prime(q), n).map_err(e2s)?;
        let p = |e: u32| q.pow(e) as usize;
        check_family(&pts, tau_odd(n), |k| ((p(n) - p(n - k)) / 2, p(n - k) * (p(k) - 3) / 4))
            .map_err(|e| format!("quadratic q={q} n={n}: {e}"))?;
        total += pts.len();
    }
    for (q, n) in [(2u64, 3u32), (5, 1), (2, 5)] {
        let pts = main_points_cubic(&prime(q), n).map_err(e2s)?;
        let used = (1..=n).filter(|k| n % k == 0 && q.pow(*k) % 3 == 2).count();
        let p = |e: u32| q.pow(e) as usize;
        check_family(&pts, used, |k| (p(n - k) * (p(k) - 2) / 3, p(n) - p(n - k)))
            .map_err(|e| format!("cubic q={q} n={n}: {e}"))?;
        total += pts.len();
    }
    Ok(format!("{total} points across 6 instances"))
}

fn translate_counts() -> Outcome {
    let f = prime(3);
    let base = main_points_quadratic(&f, 2).map_err(e2s)?;
    let mut pts = Vec::new();
    for c in &base {
        for t in translates(c).map_err(e2s)? {
            ensure(t.verified() && t.separable == Some(true), || format!("{} fails", t.label))?;
            pts.push(t.point);
        }
    }
    let orbits = distinct_orbits(&base[0].curve, &pts).map_err(e2s)?;
    ensure(orbits == 3 * tau_odd(2), || format!("{orbits} orbits, expected 3"))?;
    let a = artin_schreier_twist(&f, 2).map_err(e2s)?;
    let mut scales = 0;
    for c in &base {
        for s in scaled(c).map_err(e2s)? {
            ensure(s.verified(), || format!("{} fails", s.label))?;
            let ok = f.elements().any(|u| !u.is_zero() && s.curve.twist_poly() == &a.scale(u));
            ensure(ok, || format!("{} not on a(t^9 - t)", s.label))?;
            scales += 1;
        }
    }
    ensure(scales == 2, || format!("{scales} scaled variants"))?;
    Ok(format!("{orbits} translate orbits, {scales} scaled variants"))
}

fn delsarte_registry() -> Outcome {
    let entries = registry().map_err(e2s)?;
    ensure(entries.len() == 6, || format!("{} entries", entries.len()))?;
    // entries none of whose multisections yields a section
    let mut none = 0;
    let mut none_lines = 0;
    let mut sections = 0;
    for e in &entries {
        let r = e.run().map_err(e2s)?;
        let failed: Vec<&String> = r.checks.iter().filter(|c| !c.1).map(|c| &c.0).collect();
        ensure(failed.is_empty(), || format!("{} d={}: {failed:?}", e.name, e.d))?;
        let n = e.lines.iter().filter(|l| matches!(l.expected, LineOutcome::NoSection(_))).count();
        none_lines += n;
        if n > 0 && n == e.lines.len() {
            none += 1;
        }
        sections += r.sections.len();
    }
    ensure(none == 2, || format!("{none} no-section examples"))?;
    let ds: Vec<String> = entries.iter().map(|e| format!("{}:{}", e.name, e.d)).collect();
    Ok(format!("{sections} sections, {none} no-section examples ({none_lines} multisections) [{}]", ds.join(", ")))
}

fn check_hit(curve: &TwistCurve, h: &SearchHit) -> Result<(), String> {
    let p = h.point();
    ensure(curve.contains(&p), || format!("{h:?} off curve"))?;
    let gdf = check_gdf(curve, &p).map_err(e2s)?;
    ensure(gdf.passed(), || format!("check_gdf fails on {h:?}"))?;
    let eq = eqiv_conditions(curve, &p).map_err(e2s)?;
    ensure(eq.consistent() && eq.passed(), || format!("conditions inconsistent on {h:?}"))
}

fn oracle_agreement() -> Outcome {
    let f = prime(7);
    let a = artin_schreier_twist(&f, 1).map_err(e2s)?;
    let cubic = x3_minus_x(&f);
    let hits = search_integral_points(&a, &cubic, 0, usize::MAX, 1).map_err(e2s)?;
    let curve = TwistCurve::quadratic(a, &cubic).map_err(e2s)?;
    ensure(!hits.is_empty(), || "no hits".into())?;
    for h in &hits {
        check_hit(&curve, h)?;
    }
    let found: Vec<FPoint> = hits.iter().map(SearchHit::point).collect();
    let q1 = main_point_quadratic(&f, 1, 1).map_err(e2s)?;
    ensure(q1.point == FPoint::affine(Poly::from_terms(&f, &[(3, 1)]), Poly::from_terms(&f, &[(1, 1)])), || {
        "factory point is not (t^3, t)".into()
    })?;
    for t in translates(&q1).map_err(e2s)? {
        for p in [t.point.clone(), curve.neg(&t.point).map_err(e2s)?] {
            ensure(found.contains(&p), || format!("{} (or its negative) missing", t.label))?;
        }
    }
    Ok(format!("{} hits, all 14 translates of (t^3, +-t) present", hits.len()))
}

fn negative_control() -> Outcome {
    let f = prime(5);
    let a = artin_schreier_twist(&f, 1).map_err(e2s)?;
    let catalog = [
        ("x^3-x", Poly::from_terms(&f, &[(3, 1), (1, -1)])),
        ("x^3+1", Poly::from_terms(&f, &[(3, 1), (0, 1)])),
        ("x^3+x", Poly::from_terms(&f, &[(3, 1), (1, 1)])),
    ];
    let mut notes = Vec::new();
    let mut controls = 0;
    for (name, cubic) in catalog {
        let class = IsoClass::of(&cubic).map_err(e2s)?;
        let curve = TwistCurve::quadratic(a.clone(), &cubic).map_err(e2s)?;
        let hits = search_integral_points(&a, &cubic, 0, usize::MAX, 1).map_err(e2s)?;
        for h in &hits {
            check_gdf(&curve, &h.point()).map_err(e2s)?;
        }
        let low = hits.iter().filter(|h| 2 * h.f.deg().unwrap_or(0) <= 4 && !h.f.derivative().is_zero()).count();
        if !class.is_twist_of_standard() {
            controls += 1;
            ensure(low == 0, || format!("{name}: {low} low-degree separable points"))?;
        }
        notes.push(format!("{name} [{}] {} hits, {low} low", class.name(), hits.len()));
    }
    ensure(controls > 0, || "catalog has no non-a(x^3-x) cubic".into())?;
    Ok(notes.join("; "))
}

fn hermitian_suite() -> Outcome {
    let mut checked = 0;
    for q in [3u64, 5, 7, 11] {
        let f = prime(q);
        for m in orthogonal_group(&f).map_err(e2s)? {
            for k in 1..=2 {
                ensure(hermitian_identity_check(&f, &m, k).map_err(e2s)?, || format!("q={q} {m:?} k={k}"))?;
                checked += 1;
            }
        }
    }
    for (q, kind) in [(7u64, TauKind::Quartic), (11, TauKind::Sextic)] {
        let tp = tau_points(&prime(q), 1, kind).map_err(e2s)?;
        ensure(!tp.points.is_empty(), || format!("{} q={q}: {}", kind.name(), tp.status))?;
        for (_, c) in &tp.points {
            ensure(c.verified(), || format!("{} q={q}: {} off curve", kind.name(), c.label))?;
        }
    }
    let empty = tau_points(&prime(3), 1, TauKind::Quartic).map_err(e2s)?;
    ensure(empty.points.is_empty() && empty.matrix.is_none(), || "q=3 quartic not empty".into())?;
    Ok(format!("{checked} identity checks; q=3 quartic status: {}", empty.status))
}

fn independence() -> Outcome {
    let f = prime(3);
    let q1 = main_point_quadratic(&f, 3, 1).map_err(e2s)?;
    let q3 = main_point_quadratic(&f, 3, 3).map_err(e2s)?;
    let r = independence_certificate(&q1.curve, &[q1.point, q3.point]).map_err(e2s)?;
    ensure(r.rank == 2 && r.independent, || format!("rank {}", r.rank))?;
    ensure(r.point_count == 4 && r.trace.rem_euclid(3) == 0, || format!("N = {}, trace {}", r.point_count, r.trace))?;
    ensure(r.phis[0].deg() == Some(0), || format!("Phi_1 = {}", r.phis[0]))?;
    ensure(r.phis[1].as_monomial().is_some_and(|(_, e)| e == 6), || format!("Phi_3 = {}", r.phis[1]))?;
    Ok(format!("rank 2, Phi = {{{}, {}}}, N = 4", r.phis[0], r.phis[1]))
}

fn ring_isomorphism() -> Outcome {
    let mut cases = 0;
    for (p, l) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)] {
        let f = Field::new(p, l).unwrap();
        let q = f.order();
        let poly = prop::collection::vec(0..q, 0..=6);
        let mut runner = TestRunner::new_with_rng(
            Config { cases: 200, failure_persistence: None, ..Config::default() },
            proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
        );
        let mk = |c: Vec<u64>| Poly::new(&f, c.into_iter().map(|i| f.elem(i).unwrap()).collect());
        let local = std::cell::Cell::new(0usize);
        runner
            .run(&(poly.clone(), poly), |(a, b)| {
                let (a, b) = (mk(a), mk(b));
                let lhs = AdditivePoly::from_poly(&(&a * &b));
                let rhs = AdditivePoly::from_poly(&a).compose(&AdditivePoly::from_poly(&b)).unwrap();
                prop_assert_eq!(lhs, rhs);
                local.set(local.get() + 1);
                Ok(())
            })
            .map_err(|e| format!("F_{q}: {e}"))?;
        let local = local.get();
        ensure(local >= 200, || format!("F_{q}: only {local} cases"))?;
        cases += local;
    }
    Ok(format!("{cases} cases over 6 fields"))
}

fn zeta_class_rank() -> Outcome {
    let f3 = prime(3);
    let z = l_polynomial(2, &x3_minus_x(&f3), 1).map_err(e2s)?;
    let l: Vec<BigInt> = [1, 0, 3].map(BigInt::from).to_vec();
    ensure(z.l_coeffs == l && z.jacobian_order() == BigInt::from(4), || format!("L = {:?}", z.l_coeffs))?;
    let mut notes = Vec::new();
    for (q, n, fam, req) in [(3u64, 1u32, ClassFamily::Square, 4u32), (2, 3, ClassFamily::Cube, 9), (3, 3, ClassFamily::Square, 16)] {
        let r = class_rank_witness(&prime(q), n, fam, 1).map_err(e2s)?;
        let tag = format!("{} q={q} n={n}", fam.name());
        ensure(r.zeta.functional_equation_holds(), || format!("{tag}: functional equation"))?;
        ensure(r.zeta.in_weil_interval(), || format!("{tag}: Weil interval"))?;
        ensure(r.required_divisor == BigInt::from(req), || format!("{tag}: required {}", r.required_divisor))?;
        let j = r.zeta.jacobian_order();
        ensure(r.verdict && (&j % req) == BigInt::from(0), || format!("{tag}: {req} does not divide {j}"))?;
        notes.push(format!("{tag} g={} |J|={j}", r.zeta.genus));
    }
    let s = l_polynomial(2, &Poly::from_terms(&f3, &[(9, 1), (1, -1)]), 1).map_err(e2s)?;
    let a1 = s.counts[0] as i64 - 4;
    ensure(s.genus == 4 && a1.rem_euclid(3) == 0, || format!("t^9 - t: a1 = {a1}"))?;
    notes.push(format!("t^9-t a1={a1}"));
    Ok(notes.join("; "))
}

fn exec(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let code = isotwist::cli::run(args.iter().copied(), &mut out);
    (code, out)
}

fn determinism() -> Outcome {
    let cmds: &[&[&str]] = &[
        &["construct", "quad", "--q", "3", "--n", "3"],
        &["construct", "cubic", "--q", "2", "--n", "3"],
        &["construct", "translate", "--q", "3", "--n", "2", "--k", "1", "--family", "quad"],
        &["construct", "tau", "--q", "11", "--n", "1", "--kind", "sextic"],
        &["delsarte"],
        &["search", "--q", "7", "--A", "t^7-t"],
        &["search", "--q", "5", "--A", "t^5-t", "--f", "x^3+1"],
        &["independence", "--q", "3", "--n", "3"],
        &["zeta", "--m", "2", "--A", "t^9-t", "--q", "3"],
        &["classrank", "--q", "2", "--n", "3", "--family", "s3"],
        &["classrank", "--q", "3", "--n", "3", "--family", "s2"],
    ];
    for cmd in cmds {
        let base = exec(cmd);
        ensure(base.0 == 0, || format!("{cmd:?} exited {}", base.0))?;
        ensure(exec(cmd) == base, || format!("{cmd:?} differs on repeat"))?;
        for jobs in ["1", "4"] {
            let mut a = vec!["--jobs", jobs];
            a.extend_from_slice(cmd);
            ensure(exec(&a) == base, || format!("{cmd:?} differs with --jobs {jobs}"))?;
        }
    }
    Ok(format!("{} commands x 4 runs byte-identical", cmds.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    tolerance: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "main point families", tolerance: "exact", limit: secs(10), run: main_points },
        Criterion { id: 2, name: "translate and scaling counts", tolerance: "exact", limit: secs(1), run: translate_counts },
        Criterion { id: 3, name: "delsarte registry", tolerance: "symbolic equality", limit: secs(5), run: delsarte_registry },
        Criterion { id: 4, name: "oracle agreement q=7", tolerance: "exact", limit: secs(60), run: oracle_agreement },
        Criterion { id: 5, name: "negative control q=5", tolerance: "exact", limit: secs(60), run: negative_control },
        Criterion { id: 6, name: "hermitian/orthogonal suite", tolerance: "exact", limit: secs(10), run: hermitian_suite },
        Criterion { id: 7, name: "independence q=3 n=3", tolerance: "exact", limit: secs(1), run: independence },
        Criterion { id: 8, name: "ring isomorphism property", tolerance: "exact, 200 cases/field", limit: secs(5), run: ring_isomorphism },
        Criterion { id: 9, name: "zeta and class rank", tolerance: "exact integers", limit: secs(120), run: zeta_class_rank },
        Criterion { id: 10, name: "determinism across runs and jobs", tolerance: "byte-identical", limit: secs(120), run: determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} [{:>2}] {:<34} tolerance: {:<22} time: {:>8.3}s / {}s  {}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            c.tolerance,
            took.as_secs_f64(),
            c.limit.as_secs(),
            detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
