//! Six worked Delsarte elliptic surfaces, each with its monomial map from a
//! diagonal surface, the rational lines pushed through it and the expected
//! multisections and sections, stored as data so checks are table-driven.

use serde_json::{json, Value};

use super::{
    apply_map, fermat_cover, map_certificate, substitute_section, DelsarteSurface, Mat4, Multisection, ParamCurve,
    IDENTITY,
};
use crate::algebra::{Fe, Field, Poly, RatFunc};
use crate::curves::{FPoint, TwistCurve};
use crate::json;
use crate::Result;

/// What a line is expected to become.
#[derive(Clone, Debug)]
pub enum LineOutcome {
    /// The base coordinate is constant: the line lands in one fiber.
    Fiber,
    /// A genuine multisection with no section after substitution.
    NoSection(Multisection),
    /// A multisection whose substitution gives `point` on the surface
    /// chart `z = 1`, with base parameter `u`.
    Section { multisection: Multisection, point: FPoint },
}

#[derive(Clone, Debug)]
pub struct LineCase {
    pub label: String,
    pub line: ParamCurve,
    pub expected: LineOutcome,
}

#[derive(Clone, Debug)]
pub struct RegistryEntry {
    pub name: &'static str,
    pub field: Field,
    pub d: i64,
    pub surface: DelsarteSurface,
    pub map: Mat4,
    /// Least `n` with `n A^{-1}` integral.
    pub expected_min_cover: i64,
    /// Curve model of the generic fiber and the sign of `x` relating the
    /// surface chart to it (`x_curve = x_sign * x_surface`).
    pub curve_model: TwistCurve,
    pub x_sign: i64,
    pub lines: Vec<LineCase>,
}

/// Outcome of running one registry entry.
#[derive(Clone, Debug)]
pub struct RegistryReport {
    pub name: &'static str,
    pub checks: Vec<(String, bool)>,
    pub sections: Vec<(String, FPoint)>,
    pub json: Value,
}

impl RegistryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

fn line(f: &Field, m: [(Fe, i64); 4]) -> ParamCurve {
    ParamCurve::monomials(f, m)
}

fn upoint(f: &Field, x: (i64, usize), y: (i64, usize)) -> FPoint {
    FPoint::affine(Poly::from_terms(f, &[(x.1, x.0)]), Poly::from_terms(f, &[(y.1, y.0)]))
}

// smallest z with z^n = -1
fn root_of_minus_one(f: &Field, n: u64) -> Fe {
    let m1 = f.from_int(-1);
    f.elements().find(|&z| f.pow(z, n) == m1).expect("field chosen to contain the root")
}

/// `(t^d - t) y^2 z = x^3 - x z^2`, `d = 3 mod 4`, over `F_p`.
pub fn quadratic_t_d_minus_t(p: u64, d: i64) -> Result<RegistryEntry> {
    let f = Field::prime(p)?;
    let o = Fe::ONE;
    let h = (d - 1) / 2;
    let a = [[0, 2, 1, d], [0, 2, 1, 1], [3, 0, 0, 0], [1, 0, 2, 0]];
    let b = [[1, 0, d - 1, h], [0, d, h, 0], [1, 0, 0, 3 * h], [2, -2, 0, 0]];
    let curve = TwistCurve::quadratic(
        Poly::from_terms(&f, &[(d as usize, 1), (1, -1)]),
        &Poly::from_terms(&f, &[(3, 1), (1, -1)]),
    )?;
    let ms = Multisection::from_monomials(&f, (o, d - 1), (o, (d - 3) / 2), 2);
    Ok(RegistryEntry {
        name: "quadratic-t^d-t",
        surface: DelsarteSurface::new(&f, a, [1, -1, -1, 1])?,
        map: b,
        expected_min_cover: 2 * (d - 1),
        curve_model: curve,
        x_sign: 1,
        lines: vec![LineCase {
            label: "(t,1,t,1)".into(),
            line: line(&f, [(o, 1), (o, 0), (o, 1), (o, 0)]),
            expected: LineOutcome::Section {
                multisection: ms,
                point: upoint(&f, (1, h as usize), (1, ((d - 3) / 4) as usize)),
            },
        }],
        field: f,
        d,
    })
}

/// `y^2 z - y z^2 = (t^d - t) x^3`, `d = 2 mod 3`.
pub fn cubic_t_d_minus_t(p: u64, d: i64) -> Result<RegistryEntry> {
    let f = Field::prime(p)?;
    let o = Fe::ONE;
    let a = [[0, 2, 1, 0], [0, 1, 2, 0], [3, 0, 0, d], [3, 0, 0, 1]];
    let b = [[d - 1, d - 1, 0, d], [3 * (d - 1), 0, 1, 0], [0, 3 * (d - 1), 1, 0], [0, 0, 3, -3]];
    let curve = TwistCurve::cubic(Poly::from_terms(&f, &[(d as usize, 1), (1, -1)]))?;
    let ms = Multisection::from_monomials(&f, (o, d - 2), (o, 3 * (d - 1)), 3);
    let point = upoint(&f, (1, ((d - 2) / 3) as usize), (1, (d - 1) as usize));
    Ok(RegistryEntry {
        name: "cubic-t^d-t",
        surface: DelsarteSurface::new(&f, a, [1, -1, -1, 1])?,
        map: b,
        expected_min_cover: 3 * (d - 1),
        curve_model: curve,
        x_sign: 1,
        lines: vec![
            LineCase {
                label: "(t,1,t,1)".into(),
                line: line(&f, [(o, 1), (o, 0), (o, 1), (o, 0)]),
                expected: LineOutcome::Section { multisection: ms.clone(), point: point.clone() },
            },
            LineCase {
                label: "(1,t,1,t)".into(),
                line: line(&f, [(o, 0), (o, 1), (o, 0), (o, 1)]),
                expected: LineOutcome::Section { multisection: ms.invert_parameter(), point },
            },
            LineCase {
                label: "(1,1,t,t)".into(),
                line: line(&f, [(o, 0), (o, 0), (o, 1), (o, 1)]),
                expected: LineOutcome::Fiber,
            },
            LineCase {
                label: "(t,t,1,1)".into(),
                line: line(&f, [(o, 1), (o, 1), (o, 0), (o, 0)]),
                expected: LineOutcome::Fiber,
            },
        ],
        field: f,
        d,
    })
}

/// `y^2 z = -x^3 + (t^d + 1) z^3` for even `d = r s`, covered by
/// `u0^{6s} + u1^{6s} - u2^{6d} - u3^{6d}`.
pub fn sextic_t_d_plus_1(p: u64, d: i64, s: i64) -> Result<RegistryEntry> {
    let f = Field::prime(p)?;
    let o = Fe::ONE;
    let r = d / s;
    let a = [[0, 2, 1, 0], [3, 0, 0, 0], [0, 0, 3, d], [0, 0, 3, 0]];
    let b = [[0, 2 * s, 0, d], [3 * s, 0, 0, 0], [0, 0, 0, 3 * d], [0, 0, 6, -6]];
    let curve = TwistCurve::sextic(Poly::from_terms(&f, &[(d as usize, 1), (0, 1)]), 1)?;
    Ok(RegistryEntry {
        name: "sextic-t^d+1",
        surface: DelsarteSurface::new(&f, a, [1, 1, -1, -1])?,
        map: b,
        expected_min_cover: fermat_cover(&a, &IDENTITY)?.0,
        curve_model: curve,
        x_sign: -1,
        lines: vec![
            LineCase {
                label: "(t^r,1,t,1)".into(),
                line: line(&f, [(o, r), (o, 0), (o, 1), (o, 0)]),
                expected: LineOutcome::Section {
                    multisection: Multisection::from_monomials(&f, (o, 0), (o, 3 * d), 6),
                    point: upoint(&f, (1, 0), (1, (d / 2) as usize)),
                },
            },
            LineCase {
                label: "(1,t^r,t,1)".into(),
                line: line(&f, [(o, 0), (o, r), (o, 1), (o, 0)]),
                expected: LineOutcome::Section {
                    multisection: Multisection::from_monomials(&f, (o, 2 * d), (o, 0), 6),
                    point: upoint(&f, (1, (d / 3) as usize), (1, 0)),
                },
            },
        ],
        field: f,
        d,
    })
}

/// `y^2 z = -x^3 + (t^d + 1) x z^2` for `d = r s`, `4 | d`, covered by
/// `u0^{2s} + u1^{2s} - u2^{2d} - u3^{2d}`.
pub fn quartic_t_d_plus_1(p: u64, d: i64, s: i64) -> Result<RegistryEntry> {
    let f = Field::prime(p)?;
    let o = Fe::ONE;
    let r = d / s;
    let a = [[0, 2, 1, 0], [3, 0, 0, 0], [1, 0, 2, d], [1, 0, 2, 0]];
    let b = [[0, s, 0, d / 2], [s, s / 2, 0, 0], [0, 0, 0, 3 * d / 2], [0, 0, 2, -2]];
    let curve = TwistCurve::quartic(Poly::from_terms(&f, &[(d as usize, 1), (0, 1)]))?;
    Ok(RegistryEntry {
        name: "quartic-t^d+1",
        surface: DelsarteSurface::new(&f, a, [1, 1, -1, -1])?,
        map: b,
        expected_min_cover: fermat_cover(&a, &IDENTITY)?.0,
        curve_model: curve,
        x_sign: -1,
        lines: vec![
            LineCase {
                label: "(t^r,1,t,1)".into(),
                line: line(&f, [(o, r), (o, 0), (o, 1), (o, 0)]),
                expected: LineOutcome::Section {
                    multisection: Multisection::from_monomials(&f, (o, 0), (o, d), 2),
                    point: upoint(&f, (1, 0), (1, (d / 2) as usize)),
                },
            },
            LineCase {
                label: "(1,t^r,t,1)".into(),
                line: line(&f, [(o, 0), (o, r), (o, 1), (o, 0)]),
                expected: LineOutcome::Section {
                    multisection: Multisection::from_monomials(&f, (o, d), (o, d / 2), 2),
                    point: upoint(&f, (1, (d / 2) as usize), (1, (d / 4) as usize)),
                },
            },
        ],
        field: f,
        d,
    })
}

/// `z y^2 = x^3 + (t^d - t) x z^2`, odd `d`; neither multisection gives a
/// section. The field must contain `z` with `z^{4(d-1)} = -1`.
pub fn quartic_t_d_minus_t(p: u64, d: i64) -> Result<RegistryEntry> {
    let f = Field::prime(p)?;
    let o = Fe::ONE;
    let n = 4 * (d - 1);
    let zeta = root_of_minus_one(&f, n as u64);
    let a = [[0, 2, 1, 0], [3, 0, 0, 0], [1, 0, 2, d], [1, 0, 2, 1]];
    let b = [[0, 2 * (d - 1), 2, d], [2 * (d - 1), d - 1, 3, 0], [0, 0, 0, 3 * d], [0, 0, 4, -4]];
    // y^2 = x^3 + (t^d - t) x is the quartic twist by D = -(t^d - t)
    let curve = TwistCurve::quartic(Poly::from_terms(&f, &[(d as usize, -1), (1, 1)]))?;
    let zx = f.pow(zeta, 2 * (d as u64 - 1));
    let zy = f.pow(zeta, 3 * (d as u64 - 1));
    Ok(RegistryEntry {
        name: "quartic-t^d-t",
        surface: DelsarteSurface::new(&f, a, [1, -1, -1, 1])?,
        map: b,
        expected_min_cover: fermat_cover(&a, &IDENTITY)?.0,
        curve_model: curve,
        x_sign: 1,
        lines: vec![
            LineCase {
                label: "(t,1,t,1)".into(),
                line: line(&f, [(o, 1), (o, 0), (o, 1), (o, 0)]),
                expected: LineOutcome::NoSection(Multisection::from_monomials(&f, (o, 2), (o, 2 * d + 1), 4)),
            },
            LineCase {
                label: "(z,zt,t,1)".into(),
                line: line(&f, [(zeta, 0), (zeta, 1), (o, 1), (o, 0)]),
                expected: LineOutcome::NoSection(Multisection::from_monomials(&f, (zx, 2 * d), (zy, d + 2), 4)),
            },
        ],
        field: f,
        d,
    })
}

/// `(t^d - t) y^2 z = x^3 - z^3`, odd `d`: rational multisections only.
/// The field must contain `z` with `z^{6(d-1)} = -1`.
pub fn quadratic_x3_minus_1(p: u64, d: i64) -> Result<RegistryEntry> {
    let f = Field::prime(p)?;
    let o = Fe::ONE;
    let n = 6 * (d - 1);
    let zeta = root_of_minus_one(&f, n as u64);
    let zi = f.inv(zeta)?;
    let a = [[0, 2, 1, d], [0, 2, 1, 1], [3, 0, 0, 0], [0, 0, 3, 0]];
    let b = [[3, 0, 2 * (d - 1), d - 1], [0, 3 * d, 0, 0], [3, 0, 0, 3 * (d - 1)], [6, -6, 0, 0]];
    let curve = TwistCurve::quadratic(
        Poly::from_terms(&f, &[(d as usize, 1), (1, -1)]),
        &Poly::from_terms(&f, &[(3, 1), (0, -1)]),
    )?;
    let zy = f.pow(zi, 3 * (d as u64 - 1));
    Ok(RegistryEntry {
        name: "quadratic-x^3-1",
        surface: DelsarteSurface::new(&f, a, [1, -1, -1, 1])?,
        map: b,
        expected_min_cover: fermat_cover(&a, &IDENTITY)?.0,
        curve_model: curve,
        x_sign: 1,
        lines: vec![
            LineCase {
                label: "(t,1,t,1)".into(),
                line: line(&f, [(o, 1), (o, 0), (o, 1), (o, 0)]),
                expected: LineOutcome::NoSection(Multisection::from_monomials(&f, (o, 2 * (d - 1)), (o, -3), 6)),
            },
            LineCase {
                label: "(t/z,1/z,1,t)".into(),
                line: line(&f, [(zi, 1), (zi, 0), (o, 0), (o, 1)]),
                expected: LineOutcome::NoSection(Multisection::from_monomials(
                    &f,
                    (o, -2 * (d - 1)),
                    (zy, -3 - 3 * (d - 1)),
                    6,
                )),
            },
        ],
        field: f,
        d,
    })
}

/// The six surfaces at their default parameters.
pub fn registry() -> Result<Vec<RegistryEntry>> {
    Ok(vec![
        quadratic_t_d_minus_t(7, 7)?,
        cubic_t_d_minus_t(5, 5)?,
        sextic_t_d_plus_1(7, 6, 2)?,
        quartic_t_d_plus_1(7, 8, 2)?,
        quartic_t_d_minus_t(97, 7)?,
        quadratic_x3_minus_1(73, 7)?,
    ])
}

fn mat_json(m: &Mat4) -> Value {
    json!(m)
}

impl RegistryEntry {
    /// The diagonal surface the map starts from, read off `A B`.
    pub fn cover_exponents(&self) -> Option<[i64; 4]> {
        map_certificate(&self.surface.a, &self.map).map(|(n, _)| n)
    }

    /// The registry file record for this entry.
    pub fn to_json(&self) -> Value {
        let lines: Vec<Value> = self
            .lines
            .iter()
            .map(|l| {
                let expected = match &l.expected {
                    LineOutcome::Fiber => json!({"kind": "fiber"}),
                    LineOutcome::NoSection(m) => json!({"kind": "no-section", "multisection": m.to_json()}),
                    LineOutcome::Section { multisection, point } => json!({
                        "kind": "section",
                        "multisection": multisection.to_json(),
                        "section": json::point(point),
                    }),
                };
                json!({
                    "label": l.label,
                    "curve": l.line.0.iter().map(json::ratfunc).collect::<Vec<_>>(),
                    "expected": expected,
                })
            })
            .collect();
        json!({
            "name": self.name,
            "field": json::field(&self.field),
            "d": self.d,
            "A": mat_json(&self.surface.a),
            "coeffs": self.surface.c.iter().map(|&c| json::fe(&self.field, c)).collect::<Vec<_>>(),
            "map_B": mat_json(&self.map),
            "lines": lines,
            "expected": {
                "min_cover": self.expected_min_cover,
                "curve_model": json::curve(&self.curve_model),
                "x_sign": self.x_sign,
            },
        })
    }

    /// Runs every check for this entry.
    pub fn run(&self) -> Result<RegistryReport> {
        let f = &self.field;
        let mut checks = Vec::new();
        let mut sections = Vec::new();
        let mut line_json = Vec::new();

        let (min_cover, _) = fermat_cover(&self.surface.a, &IDENTITY)?;
        checks.push(("minimal cover degree".to_string(), min_cover == self.expected_min_cover));
        let cert = map_certificate(&self.surface.a, &self.map);
        checks.push(("A B = diag(N) + common row".to_string(), cert.is_some()));
        let n = cert.map(|c| c.0).unwrap_or([1; 4]);
        let c_int = self.surface.c.map(|c| if c == Fe::ONE { 1 } else { -1 });
        let source = DelsarteSurface::diagonal(f, n, c_int)?;

        for case in &self.lines {
            let tag = &case.label;
            checks.push((format!("{tag} lies on the cover"), source.contains(&case.line)));
            let img = apply_map(&self.map, &case.line)?;
            checks.push((format!("{tag} image lies on the surface"), self.surface.contains(&img)));
            let ms = Multisection::from_image(&img)?;
            let chart = ParamCurve([ms.x.clone(), ms.y.clone(), RatFunc::one(f), ms.base.clone()]);
            checks.push((format!("{tag} multisection lies on the surface"), self.surface.contains(&chart)));
            let mut lj = json!({"label": tag, "multisection": ms.to_json()});
            match &case.expected {
                LineOutcome::Fiber => {
                    checks.push((format!("{tag} lands in a fiber"), ms.is_fiber()));
                    lj["outcome"] = json!("fiber");
                }
                LineOutcome::NoSection(expected) => {
                    checks.push((format!("{tag} multisection matches"), &ms == expected));
                    let sec = substitute_section(&ms)?;
                    checks.push((format!("{tag} has no section"), sec.is_none()));
                    lj["outcome"] = json!("no-section");
                }
                LineOutcome::Section { multisection, point } => {
                    checks.push((format!("{tag} multisection matches"), &ms == multisection));
                    let sec = substitute_section(&ms)?;
                    checks.push((format!("{tag} section matches"), sec.as_ref() == Some(point)));
                    if let Some(FPoint::Affine { x, y }) = &sec {
                        let u = RatFunc::from(Poly::t(f));
                        let on = ParamCurve([x.clone(), y.clone(), RatFunc::one(f), u]);
                        checks.push((format!("{tag} section lies on the surface"), self.surface.contains(&on)));
                        let model = FPoint::Affine { x: x.scale(f.from_int(self.x_sign)), y: y.clone() };
                        checks.push((format!("{tag} section lies on the curve model"), self.curve_model.contains(&model)));
                        lj["section"] = json::point(sec.as_ref().expect("some"));
                        lj["curve_point"] = json::point(&model);
                        sections.push((tag.clone(), model));
                    }
                    lj["outcome"] = json!("section");
                }
            }
            line_json.push(lj);
        }
        let ok = checks.iter().all(|c| c.1);
        let json = json!({
            "name": self.name,
            "d": self.d,
            "field": json::field(f),
            "min_cover": min_cover,
            "cover_exponents": n,
            "curve_model": json::curve(&self.curve_model),
            "lines": line_json,
            "checks": checks.iter().map(|(k, v)| json!({"check": k, "ok": v})).collect::<Vec<_>>(),
            "ok": ok,
        });
        Ok(RegistryReport { name: self.name, checks, sections, json })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_passes() {
        for e in registry().unwrap() {
            let r = e.run().unwrap();
            for (k, v) in &r.checks {
                assert!(v, "{}: {k}", e.name);
            }
        }
    }

    #[test]
    fn minimal_cover_degrees() {
        let got: Vec<i64> =
            registry().unwrap().iter().map(|e| fermat_cover(&e.surface.a, &IDENTITY).unwrap().0).collect();
        assert_eq!(got, vec![12, 12, 6, 24, 24, 12]);
    }
}
