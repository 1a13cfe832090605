//! The `isotwist` command line.
//!
//! Every command writes JSON (one document, or JSON lines for `search`)
//! carrying the `config` that reproduces it. `--jobs` and `--out` are left
//! out of `config`: they never change the result, and leaving them out keeps
//! outputs byte-identical across worker counts.
//!
//! Exit codes: 0 success, 1 a certificate or check failed, 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{Embedding, Field, Poly};
use crate::analysis::{check_gdf, eqiv_conditions, hit_json, independence_certificate, search_integral_points};
use crate::classgroup::{class_rank_witness, l_polynomial, ClassFamily};
use crate::constructions::{self as cons, Construction, OrthMatrix, TauKind};
use crate::curves::TwistCurve;
use crate::delsarte::registry;
use crate::{json as js, Error, Result};

#[derive(Parser, Debug)]
#[command(name = "isotwist", version, about = "Integral points on isotrivial elliptic curves over F_q(t)")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for search, zeta and classrank.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build points with their certificates.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Check a point (JSON file or inline JSON) against a curve.
    Verify {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        point: String,
    },
    /// Exhaustive search for integral points on A(t) y^2 = f(x).
    Search {
        #[arg(long)]
        q: u64,
        #[arg(long = "A")]
        a: String,
        #[arg(long, default_value = "x^3 - x")]
        f: String,
        #[arg(long, default_value_t = 0)]
        min_deg: usize,
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Run the Delsarte registry.
    Delsarte {
        /// Only this entry.
        #[arg(long)]
        name: Option<String>,
    },
    /// Rank certificate for the quadratic main points Q_k.
    Independence {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        /// Divisors to use; all odd divisors of n by default.
        #[arg(long, value_delimiter = ',')]
        k: Vec<u32>,
    },
    /// L-polynomial of s^m = A(t).
    Zeta {
        #[arg(long)]
        m: u64,
        #[arg(long = "A")]
        a: String,
        #[arg(long)]
        q: u64,
        /// Refuse curves whose genus (number of extensions counted) exceeds this.
        #[arg(long, default_value_t = 15)]
        max_ext: usize,
    },
    /// Jacobian-order witness for s^m = t^{q^n} - t.
    Classrank {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value = "s2")]
        family: String,
    },
    /// Registry plus invariant checks.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Shape {
    Quad,
    Cubic,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Quartic,
    Sextic,
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Q_k on (t^{q^n} - t) y^2 = x^3 - x.
    Quad {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
    },
    /// S_k on y^2 - y = (t^{q^n} - t) x^3.
    Cubic {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
    },
    /// The point built from a polynomial A0 divisible by t^k - 1.
    General {
        #[arg(long)]
        q: u64,
        #[arg(long = "A0")]
        a0: String,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "quad")]
        family: Shape,
    },
    /// Translates Q(t + a) and scalings Q(a t) of a main point.
    Translate {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "quad")]
        family: Shape,
    },
    /// Divisor-indexed points from an orthogonal matrix.
    Tau {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        kind: Kind,
        /// a,b,c,d; the first matrix with cd != 0 by default.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        matrix: Option<Vec<i64>>,
    },
}

/// Parses `argv` (without the program name) and runs it, writing to `out`
/// unless `--out` is given. Returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("isotwist")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = execute(&cli);
    match outcome {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string()),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(Error::OffCurve) => {
            eprintln!("error: point is not on the curve");
            1
        }
        Err(e @ Error::Inconsistent(_)) => {
            eprintln!("error: {e}");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn field_of(q: u64) -> Result<Field> {
    Field::from_order(q)
}

fn doc(v: &Value) -> String {
    js::to_line(v) + "\n"
}

fn with_config(mut v: Value, config: Value) -> Value {
    v["config"] = config;
    v
}

fn execute(cli: &Cli) -> Result<(String, bool)> {
    let jobs = cli.jobs;
    match &cli.cmd {
        Cmd::Construct { what } => construct(what),
        Cmd::Verify { curve, point } => {
            let cv = read_json(curve)?;
            let c = js::parse_curve(&cv)?;
            let p = js::parse_point(c.field(), &read_json(point)?)?;
            let cert = c.certificate(&p);
            let ok = cert.holds();
            let mut v = json!({
                "curve": js::curve(&c),
                "point": js::point(&p),
                "certificate": {"equation": cert.equation, "lhs": js::poly(&cert.lhs), "rhs": js::poly(&cert.rhs), "holds": ok},
                "integral": p.is_integral(),
            });
            if ok && !p.is_constant() {
                v["separable"] = json!(c.is_separable(&p)?);
            }
            let config = json!({"subcommand": "verify", "curve": cv, "point": read_json(point)?});
            Ok((doc(&with_config(v, config)), ok))
        }
        Cmd::Search { q, a, f, min_deg, max_deg } => {
            let field = field_of(*q)?;
            let a = parse_poly(&field, a)?;
            let f = parse_poly(&field, f)?;
            let curve = TwistCurve::quadratic(a.clone(), &f)?;
            let hits = search_integral_points(&a, &f, *min_deg, max_deg.unwrap_or(usize::MAX), jobs)?;
            let config = json!({
                "subcommand": "search", "field": js::field(&field), "A": js::poly(&a), "f": js::poly(&f),
                "min_deg": min_deg, "max_deg": max_deg,
            });
            let mut text = doc(&json!({"config": config, "hits": hits.len()}));
            let mut ok = true;
            for h in &hits {
                let mut v = hit_json(&curve, h);
                let p = h.point();
                let gdf = check_gdf(&curve, &p)?;
                ok &= gdf.passed() && curve.contains(&p);
                v["gdf"] = gdf.to_json();
                v["equiv"] = match eqiv_conditions(&curve, &p) {
                    Ok(r) => {
                        ok &= r.passed();
                        r.to_json(&field)
                    }
                    Err(Error::Precondition(msg)) => json!({"skipped": msg}),
                    Err(e) => return Err(e),
                };
                text.push_str(&doc(&v));
            }
            Ok((text, ok))
        }
        Cmd::Delsarte { name } => {
            let mut reports = Vec::new();
            let mut ok = true;
            for entry in registry()? {
                if name.as_deref().is_some_and(|n| n != entry.name) {
                    continue;
                }
                let r = entry.run()?;
                ok &= r.passed();
                reports.push(json!({"name": r.name, "passed": r.passed(), "record": r.json,
                    "checks": r.checks.iter().map(|(n, b)| json!({"name": n, "ok": b})).collect::<Vec<_>>()}));
            }
            if reports.is_empty() {
                return Err(Error::Precondition(format!("no registry entry named {}", name.as_deref().unwrap_or(""))));
            }
            let config = json!({"subcommand": "delsarte", "name": name});
            Ok((doc(&json!({"config": config, "entries": reports, "passed": ok})), ok))
        }
        Cmd::Independence { q, n, k } => {
            let field = field_of(*q)?;
            let ks = if k.is_empty() { cons::odd_divisors(*n) } else { k.clone() };
            let pts = ks.iter().map(|&k| cons::main_point_quadratic(&field, *n, k)).collect::<Result<Vec<_>>>()?;
            let curve = &pts[0].curve;
            let points: Vec<_> = pts.iter().map(|c| c.point.clone()).collect();
            let r = independence_certificate(curve, &points)?;
            let config = json!({"subcommand": "independence", "q": q, "n": n, "k": ks});
            let v = json!({"config": config, "curve": js::curve(curve), "report": r.to_json(&field)});
            Ok((doc(&v), r.independent))
        }
        Cmd::Zeta { m, a, q, max_ext } => {
            let field = field_of(*q)?;
            let a = parse_poly(&field, a)?;
            let d = a.deg().unwrap_or(0);
            let genus = (*m as usize).saturating_sub(1) * d.saturating_sub(1) / 2;
            if genus > *max_ext {
                return Err(Error::Precondition(format!("genus {genus} exceeds --max-ext {max_ext}")));
            }
            let z = l_polynomial(*m, &a, jobs)?;
            let ok = z.functional_equation_holds() && z.in_weil_interval();
            let config = json!({"subcommand": "zeta", "m": m, "A": js::poly(&a), "field": js::field(&field), "max_ext": max_ext});
            Ok((doc(&with_config(z.to_json(), config)), ok))
        }
        Cmd::Classrank { q, n, m, family } => {
            let fam = ClassFamily::parse(family)
                .ok_or_else(|| Error::Precondition(format!("unknown family {family}; use s2 or s3")))?;
            if m.is_some_and(|m| m != fam.m()) {
                return Err(Error::Precondition(format!("family {} has m = {}", fam.name(), fam.m())));
            }
            let field = field_of(*q)?;
            let r = class_rank_witness(&field, *n, fam, jobs)?;
            let ok = r.verdict && r.zeta.functional_equation_holds() && r.zeta.in_weil_interval();
            let config = json!({"subcommand": "classrank", "q": q, "n": n, "family": fam.name()});
            Ok((doc(&with_config(r.to_json(), config)), ok))
        }
        Cmd::Selftest => {
            let checks = selftest()?;
            let ok = checks.iter().all(|(_, b)| *b);
            let v = json!({
                "config": {"subcommand": "selftest"},
                "checks": checks.iter().map(|(n, b)| json!({"name": n, "ok": b})).collect::<Vec<_>>(),
                "passed": ok,
            });
            Ok((doc(&v), ok))
        }
    }
}

fn points_doc(cs: &[Construction], config: Value) -> Result<(String, bool)> {
    let ok = cs.iter().all(Construction::verified);
    let curve = &cs[0].curve;
    let orbits = if cs.iter().all(|c| c.curve == *curve && !c.point.is_constant()) {
        let pts: Vec<_> = cs.iter().map(|c| c.point.clone()).collect();
        Some(cons::distinct_orbits(curve, &pts)?)
    } else {
        None
    };
    let v = json!({
        "config": config,
        "points": cs.iter().map(Construction::to_json).collect::<Vec<_>>(),
        "distinct_orbits": orbits,
    });
    Ok((doc(&v), ok))
}

fn construct(what: &Construct) -> Result<(String, bool)> {
    match what {
        Construct::Quad { q, n, k } | Construct::Cubic { q, n, k } => {
            let quad = matches!(what, Construct::Quad { .. });
            let field = field_of(*q)?;
            let sub = if quad { "quad" } else { "cubic" };
            let config = json!({"subcommand": "construct", "kind": sub, "q": q, "n": n, "k": k});
            match k {
                Some(k) => {
                    let c = if quad {
                        cons::main_point_quadratic(&field, *n, *k)?
                    } else {
                        cons::main_point_cubic(&field, *n, *k)?
                    };
                    Ok((doc(&with_config(c.to_json(), config)), c.verified()))
                }
                None => {
                    let cs = if quad { cons::main_points_quadratic(&field, *n)? } else { cons::main_points_cubic(&field, *n)? };
                    if cs.is_empty() {
                        return Err(Error::Precondition("no admissible divisor k".into()));
                    }
                    points_doc(&cs, config)
                }
            }
        }
        Construct::General { q, a0, k, family } => {
            let field = field_of(*q)?;
            let a0p = parse_poly(&field, a0)?;
            let c = match family {
                Shape::Quad => cons::general_point_quadratic(&a0p, *k)?,
                Shape::Cubic => cons::general_point_cubic(&a0p, *k)?,
            };
            let config = json!({"subcommand": "construct", "kind": "general", "q": q, "A0": js::poly(&a0p), "k": k,
                "family": format!("{family:?}").to_lowercase()});
            Ok((doc(&with_config(c.to_json(), config)), c.verified()))
        }
        Construct::Translate { q, n, k, family } => {
            let field = field_of(*q)?;
            let base = match family {
                Shape::Quad => cons::main_point_quadratic(&field, *n, *k)?,
                Shape::Cubic => cons::main_point_cubic(&field, *n, *k)?,
            };
            let ts = cons::translates(&base)?;
            let sc = cons::scaled(&base)?;
            let pts: Vec<_> = ts.iter().map(|c| c.point.clone()).collect();
            let orbits = cons::distinct_orbits(&base.curve, &pts)?;
            let ok = ts.iter().chain(&sc).all(Construction::verified);
            let config = json!({"subcommand": "construct", "kind": "translate", "q": q, "n": n, "k": k,
                "family": format!("{family:?}").to_lowercase()});
            let v = json!({
                "config": config,
                "translates": ts.iter().map(Construction::to_json).collect::<Vec<_>>(),
                "scaled": sc.iter().map(Construction::to_json).collect::<Vec<_>>(),
                "distinct_orbits": orbits,
            });
            Ok((doc(&v), ok))
        }
        Construct::Tau { q, n, kind, matrix } => {
            let field = field_of(*q)?;
            let kind = match kind {
                Kind::Quartic => TauKind::Quartic,
                Kind::Sextic => TauKind::Sextic,
            };
            let r = match matrix {
                Some(m) if m.len() != 4 => {
                    return Err(Error::Precondition("--matrix takes four entries a,b,c,d".into()));
                }
                Some(m) => {
                    let m = OrthMatrix::from_ints(&field, [[m[0], m[1]], [m[2], m[3]]])?;
                    cons::tau_points_with(&field, *n, kind, &m)?
                }
                None => cons::tau_points(&field, *n, kind)?,
            };
            let ok = r.points.iter().all(|(_, c)| c.verified());
            let config = json!({"subcommand": "construct", "kind": "tau", "q": q, "n": n, "family": kind.name(), "matrix": matrix});
            Ok((doc(&with_config(r.to_json(&field), config)), ok))
        }
    }
}

fn read_json(arg: &str) -> Result<Value> {
    let text = if arg.trim_start().starts_with(['{', '[', '"']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Malformed(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Malformed(e.to_string()))
}

/// Reads a polynomial written like `t^27 - t`, `2*x^3 + x + 1` (either
/// variable name) or as a JSON coefficient array. Coefficients are integers
/// reduced into the prime field.
pub fn parse_poly(field: &Field, s: &str) -> Result<Poly> {
    let s = s.trim();
    if s.starts_with('[') {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
        return js::parse_poly(field, &v);
    }
    let bad = || Error::Malformed(format!("cannot read polynomial {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    let mut terms: Vec<(usize, i64)> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if terms.is_empty() => (1, rest),
            _ => return Err(bad()),
        };
        let end = body[1..].find(['+', '-']).map_or(body.len(), |i| i + 1);
        let term = &body[..end];
        rest = &body[end..];
        let (coef, mono) = match term.find(['t', 'x']) {
            Some(i) => {
                let c = term[..i].trim_end_matches('*');
                let c = if c.is_empty() { 1 } else { c.parse::<i64>().map_err(|_| bad())? };
                let e = match &term[i + 1..] {
                    "" => 1,
                    e => e.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?,
                };
                (c, e)
            }
            None => (term.parse::<i64>().map_err(|_| bad())?, 0),
        };
        terms.push((mono, sign * coef));
    }
    Ok(Poly::from_terms(field, &terms))
}

/// The checks behind `isotwist selftest`.
pub fn selftest() -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for entry in registry()? {
        let r = entry.run()?;
        out.push((format!("delsarte {}", r.name), r.passed()));
    }
    for q in [3u64, 5, 7] {
        let f = Field::prime(q)?;
        let group = cons::orthogonal_group(&f)?;
        let mut ok = true;
        for m in &group {
            for k in 1..=2 {
                ok &= cons::hermitian_identity_check(&f, m, k)?;
            }
        }
        out.push((format!("hermitian identity over F_{q}"), ok));
    }
    for (q, n) in [(3u64, 3u32), (7, 1)] {
        let f = Field::prime(q)?;
        let pts = cons::main_points_quadratic(&f, n)?;
        let ok = pts.iter().all(|c| c.verified() && c.separable == Some(true) && c.point.is_integral());
        let raw: Vec<_> = pts.iter().map(|c| c.point.clone()).collect();
        let orbits = cons::distinct_orbits(&pts[0].curve, &raw)?;
        out.push((format!("quadratic main points q={q} n={n}"), ok && orbits == pts.len()));
    }
    for (q, n) in [(2u64, 3u32), (5, 1)] {
        let f = Field::prime(q)?;
        let pts = cons::main_points_cubic(&f, n)?;
        let ok = pts.iter().all(|c| c.verified() && c.separable == Some(true));
        out.push((format!("cubic main points q={q} n={n}"), ok));
    }
    let f3 = Field::prime(3)?;
    let q1 = cons::main_point_quadratic(&f3, 3, 1)?;
    let q3 = cons::main_point_quadratic(&f3, 3, 3)?;
    let r = independence_certificate(&q1.curve, &[q1.point.clone(), q3.point.clone()])?;
    out.push(("independence q=3 n=3".into(), r.rank == 2));
    let f7 = Field::prime(7)?;
    let curve = TwistCurve::quadratic(parse_poly(&f7, "t^7 - t")?, &parse_poly(&f7, "x^3 - x")?)?;
    let hits = search_integral_points(curve.twist_poly(), &parse_poly(&f7, "x^3-x")?, 3, 3, 1)?;
    let mut ok = !hits.is_empty();
    for h in &hits {
        ok &= check_gdf(&curve, &h.point())?.passed() && eqiv_conditions(&curve, &h.point())?.passed();
    }
    out.push(("oracle q=7 deg F = 3".into(), ok));
    let f27 = Field::new(3, 3)?;
    let e = Embedding::new(&f3, &f27)?;
    let a = parse_poly(&f3, "t^27 - t")?.embed(&e)?;
    let c27 = TwistCurve::quadratic(a, &parse_poly(&f27, "x^3 - x")?)?;
    let p = crate::curves::FPoint::affine(parse_poly(&f27, "t^13")?, parse_poly(&f27, "t^6")?);
    out.push(("equivalent conditions over F_27".into(), eqiv_conditions(&c27, &p)?.passed()));
    let z = l_polynomial(2, &parse_poly(&f3, "t^3 - t")?, 1)?;
    out.push(("zeta s^2 = t^3 - t".into(), z.jacobian_order() == 4.into() && z.functional_equation_holds()));
    Ok(out)
}
