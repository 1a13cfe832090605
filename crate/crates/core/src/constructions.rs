//! Point factories for the twist families.
//!
//! Every factory returns a [`Construction`]: the curve, the point and the
//! cleared-denominator certificate, so callers never have to trust the
//! construction code itself.

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::additive::{divisor_witness, trace_poly, AdditivePoly};
use crate::algebra::{Fe, Field, Poly};
use crate::curves::{Certificate, FPoint, TwistCurve};
use crate::{json as js, Error, Result};

/// A point together with its curve and membership certificate.
#[derive(Clone, Debug)]
pub struct Construction {
    pub label: String,
    pub curve: TwistCurve,
    pub point: FPoint,
    pub certificate: Certificate,
    pub separable: Option<bool>,
}

impl Construction {
    pub fn new(label: impl Into<String>, curve: TwistCurve, point: FPoint) -> Result<Construction> {
        let certificate = curve.certificate(&point);
        let separable = if point.is_constant() { None } else { Some(curve.is_separable(&point)?) };
        Ok(Construction { label: label.into(), curve, point, certificate, separable })
    }

    pub fn verified(&self) -> bool {
        self.certificate.holds()
    }

    /// Degrees of the numerators of `x` and `y`.
    pub fn degrees(&self) -> (Option<usize>, Option<usize>) {
        match &self.point {
            FPoint::Affine { x, y } => (x.num().deg(), y.num().deg()),
            FPoint::Infinity => (None, None),
        }
    }

    pub fn to_json(&self) -> Value {
        let (dx, dy) = self.degrees();
        json!({
            "label": self.label,
            "curve": js::curve(&self.curve),
            "point": js::point(&self.point),
            "certificate": {
                "equation": self.certificate.equation,
                "lhs": js::poly(&self.certificate.lhs),
                "rhs": js::poly(&self.certificate.rhs),
                "holds": self.certificate.holds(),
            },
            "degrees": {"x": dx, "y": dy},
            "integral": self.point.is_integral(),
            "separable": self.separable,
        })
    }
}

fn pow_u(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e).ok_or_else(|| Error::Precondition(format!("{q}^{e} overflows")))
}

/// `t^{q^n} - t`.
pub fn artin_schreier_twist(field: &Field, n: u32) -> Result<Poly> {
    let qn = pow_u(field.order(), n)? as usize;
    Ok(Poly::from_terms(field, &[(qn, 1), (1, -1)]))
}

fn x3_minus_x(field: &Field) -> Poly {
    Poly::from_terms(field, &[(3, 1), (1, -1)])
}

fn check_divides(n: u32, k: u32) -> Result<()> {
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::Precondition(format!("k = {k} must divide n = {n}")));
    }
    Ok(())
}

fn quadratic_exponents(q: u64, k: u32) -> Result<(u64, u64)> {
    let qk = pow_u(q, k)?;
    if qk % 4 != 3 {
        return Err(Error::Precondition(format!("q^k = {qk} must be 3 mod 4 (q = 3 mod 4, k odd)")));
    }
    Ok(((qk - 1) / 2, (qk - 3) / 4))
}

fn cubic_exponents(q: u64, k: u32) -> Result<(u64, u64)> {
    let qk = pow_u(q, k)?;
    if qk % 3 != 2 {
        return Err(Error::Precondition(format!("q^k = {qk} must be 2 mod 3 (q = 2 mod 3, k odd)")));
    }
    Ok(((qk - 2) / 3, qk - 1))
}

/// `Q_k = (B^{(q^k-1)/2}, B^{(q^k-3)/4})` with `B = T^n_k`, on
/// `(t^{q^n} - t) y^2 = x^3 - x`.
pub fn main_point_quadratic(field: &Field, n: u32, k: u32) -> Result<Construction> {
    check_divides(n, k)?;
    let (ex, ey) = quadratic_exponents(field.order(), k)?;
    let b = trace_poly(field, n, k)?.expand()?;
    let curve = TwistCurve::quadratic(artin_schreier_twist(field, n)?, &x3_minus_x(field))?;
    let point = FPoint::affine(b.pow(ex), b.pow(ey));
    Construction::new(format!("Q_{k}"), curve, point)
}

/// `S_k = (B^{(q^k-2)/3}, B^{q^k-1})` with `B = T^n_k`, on
/// `y^2 - y = (t^{q^n} - t) x^3`.
pub fn main_point_cubic(field: &Field, n: u32, k: u32) -> Result<Construction> {
    check_divides(n, k)?;
    let (ex, ey) = cubic_exponents(field.order(), k)?;
    let b = trace_poly(field, n, k)?.expand()?;
    let curve = TwistCurve::cubic(artin_schreier_twist(field, n)?)?;
    let point = FPoint::affine(b.pow(ex), b.pow(ey));
    Construction::new(format!("S_{k}"), curve, point)
}

/// The quadratic point built from any `A_0` divisible by `t^k - 1`, on
/// `A_0(F) y^2 = x^3 - x`.
pub fn general_point_quadratic(a0: &Poly, k: u32) -> Result<Construction> {
    let field = a0.field();
    let (ex, ey) = quadratic_exponents(field.order(), k)?;
    let b = divisor_witness(a0, k)?.expand()?;
    let a = AdditivePoly::from_poly(a0).expand()?;
    let curve = TwistCurve::quadratic(a, &x3_minus_x(field))?;
    let point = FPoint::affine(b.pow(ex), b.pow(ey));
    Construction::new(format!("Q[A0={a0}, k={k}]"), curve, point)
}

/// The cubic analogue on `y^2 - y = A_0(F) x^3`.
pub fn general_point_cubic(a0: &Poly, k: u32) -> Result<Construction> {
    let field = a0.field();
    let (ex, ey) = cubic_exponents(field.order(), k)?;
    let b = divisor_witness(a0, k)?.expand()?;
    let a = AdditivePoly::from_poly(a0).expand()?;
    let curve = TwistCurve::cubic(a)?;
    let point = FPoint::affine(b.pow(ex), b.pow(ey));
    Construction::new(format!("S[A0={a0}, k={k}]"), curve, point)
}

/// Odd positive divisors of `n`, ascending.
pub fn odd_divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|k| n.is_multiple_of(*k) && k % 2 == 1).collect()
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|k| n.is_multiple_of(*k)).collect()
}

/// One quadratic point per odd divisor of `n`.
pub fn main_points_quadratic(field: &Field, n: u32) -> Result<Vec<Construction>> {
    odd_divisors(n).into_iter().map(|k| main_point_quadratic(field, n, k)).collect()
}

/// One cubic point per divisor `k` of `n` with `q^k = 2 mod 3`.
pub fn main_points_cubic(field: &Field, n: u32) -> Result<Vec<Construction>> {
    let q = field.order();
    divisors(n)
        .into_iter()
        .filter(|&k| q.checked_pow(k).is_some_and(|qk| qk % 3 == 2))
        .map(|k| main_point_cubic(field, n, k))
        .collect()
}

/// `{Q(t + a) : a in F_q}`, all on the same curve when the twist is
/// additive.
pub fn translates(c: &Construction) -> Result<Vec<Construction>> {
    let f = c.curve.field();
    f.elements()
        .map(|a| {
            let shift = Poly::new(f, vec![a, Fe::ONE]);
            let p = c.point.compose_poly(&shift)?;
            let curve = c.curve.with_twist(c.curve.twist_poly().compose(&shift))?;
            Construction::new(format!("{}(t+{})", c.label, a.index()), curve, p)
        })
        .collect()
}

/// `{Q(a t) : a in F_q^*}`, each on the twist by `A(a t)`, which is
/// `a A(t)` for additive `A`.
pub fn scaled(c: &Construction) -> Result<Vec<Construction>> {
    let f = c.curve.field();
    f.elements()
        .filter(|a| !a.is_zero())
        .map(|a| {
            let p = c.point.scale_arg(a);
            let curve = c.curve.with_twist(c.curve.twist_poly().scale_arg(a))?;
            Construction::new(format!("{}({}t)", c.label, a.index()), curve, p)
        })
        .collect()
}

/// Number of distinct Frobenius orbits among non-constant points on one
/// curve, compared by orbit root.
pub fn distinct_orbits(curve: &TwistCurve, points: &[FPoint]) -> Result<usize> {
    let mut roots: Vec<FPoint> = Vec::new();
    for p in points {
        let (r, _) = curve.orbit_root(p)?;
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    Ok(roots.len())
}

/// A 2x2 matrix `[[a, b], [c, d]]` over `F_q` with `M^T M = I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrthMatrix {
    pub a: Fe,
    pub b: Fe,
    pub c: Fe,
    pub d: Fe,
}

impl OrthMatrix {
    pub fn from_ints(field: &Field, m: [[i64; 2]; 2]) -> Result<OrthMatrix> {
        let o = OrthMatrix {
            a: field.from_int(m[0][0]),
            b: field.from_int(m[0][1]),
            c: field.from_int(m[1][0]),
            d: field.from_int(m[1][1]),
        };
        if !o.is_orthogonal(field) {
            return Err(Error::Precondition(format!("{m:?} is not orthogonal over {field}")));
        }
        Ok(o)
    }

    pub fn is_orthogonal(&self, f: &Field) -> bool {
        let sq = |x| f.mul(x, x);
        f.add(sq(self.a), sq(self.c)) == Fe::ONE
            && f.add(sq(self.b), sq(self.d)) == Fe::ONE
            && f.add(f.mul(self.a, self.b), f.mul(self.c, self.d)).is_zero()
    }

    pub fn cd_nonzero(&self) -> bool {
        !self.c.is_zero() && !self.d.is_zero()
    }

    pub fn to_json(&self, f: &Field) -> Value {
        json!([[js::fe(f, self.a), js::fe(f, self.b)], [js::fe(f, self.c), js::fe(f, self.d)]])
    }
}

/// Every orthogonal 2x2 matrix over `F_q`, in lexicographic order of
/// `(a, b, c, d)` by canonical index.
pub fn orthogonal_group(field: &Field) -> Result<Vec<OrthMatrix>> {
    crate::limits::check_scan(field.order())?;
    let f = field;
    let mut out = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                if f.add(f.mul(a, a), f.mul(c, c)) != Fe::ONE {
                    continue;
                }
                for d in f.elements() {
                    let m = OrthMatrix { a, b, c, d };
                    if m.is_orthogonal(f) {
                        out.push(m);
                    }
                }
            }
        }
    }
    Ok(out)
}

// coefficients of X^i Y^{D-i}, i ascending
fn linear_form_power(f: &Field, a: Fe, b: Fe, e: usize) -> Vec<Fe> {
    let mut v = vec![Fe::ONE];
    for _ in 0..e {
        let mut next = vec![Fe::ZERO; v.len() + 1];
        for (i, &c) in v.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], f.mul(c, a));
            next[i] = f.add(next[i], f.mul(c, b));
        }
        v = next;
    }
    v
}

/// Expands `(aX + bY)^{q^k+1} + (cX + dY)^{q^k+1}` and compares it with
/// `X^{q^k+1} + Y^{q^k+1}`.
pub fn hermitian_identity_check(field: &Field, m: &OrthMatrix, k: u32) -> Result<bool> {
    let e = pow_u(field.order(), k)? as usize + 1;
    let f = field;
    let u = linear_form_power(f, m.a, m.b, e);
    let v = linear_form_power(f, m.c, m.d, e);
    Ok((0..=e).all(|i| {
        let want = if i == 0 || i == e { Fe::ONE } else { Fe::ZERO };
        f.add(u[i], v[i]) == want
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauKind {
    Quartic,
    Sextic,
}

impl TauKind {
    pub fn name(self) -> &'static str {
        match self {
            TauKind::Quartic => "quartic",
            TauKind::Sextic => "sextic",
        }
    }
}

/// Points indexed by the divisors of `n`, or an explanation of why there
/// are none.
#[derive(Clone, Debug)]
pub struct TauPoints {
    pub matrix: Option<OrthMatrix>,
    pub status: String,
    pub points: Vec<(u32, Construction)>,
}

impl TauPoints {
    pub fn to_json(&self, f: &Field) -> Value {
        json!({
            "matrix": self.matrix.map(|m| m.to_json(f)),
            "status": self.status,
            "points": self.points.iter().map(|(k, c)| {
                let mut v = c.to_json();
                v["k"] = json!(k);
                v
            }).collect::<Vec<_>>(),
        })
    }
}

/// The divisor-indexed points on `y^2 = x^3 - (t^{q^n+1}+1) x` (quartic)
/// or `y^2 = x^3 + t^{q^n+1} + 1` (sextic), using the first orthogonal
/// matrix with `cd != 0`.
pub fn tau_points(field: &Field, n: u32, kind: TauKind) -> Result<TauPoints> {
    check_tau(field, n, kind)?;
    match orthogonal_group(field)?.into_iter().find(OrthMatrix::cd_nonzero) {
        Some(m) => tau_points_with(field, n, kind, &m),
        None => Ok(TauPoints {
            matrix: None,
            status: "no orthogonal matrix with cd != 0".into(),
            points: Vec::new(),
        }),
    }
}

fn check_tau(field: &Field, n: u32, kind: TauKind) -> Result<()> {
    let q = field.order();
    if n.is_multiple_of(2) {
        return Err(Error::Precondition("n must be odd".into()));
    }
    match kind {
        TauKind::Quartic if q % 4 != 3 => Err(Error::Precondition(format!("quartic needs q = 3 mod 4, got {q}"))),
        TauKind::Sextic if q % 3 != 2 || q.is_multiple_of(2) => {
            Err(Error::Precondition(format!("sextic needs odd q = 2 mod 3, got {q}")))
        }
        _ => Ok(()),
    }
}

/// As [`tau_points`] with an explicit matrix.
pub fn tau_points_with(field: &Field, n: u32, kind: TauKind, m: &OrthMatrix) -> Result<TauPoints> {
    check_tau(field, n, kind)?;
    if !m.is_orthogonal(field) || !m.cd_nonzero() {
        return Err(Error::Precondition("matrix must be orthogonal with cd != 0".into()));
    }
    let q = field.order();
    let qn1 = pow_u(q, n)? + 1;
    let d = Poly::from_terms(field, &[(qn1 as usize, 1), (0, 1)]);
    let curve = match kind {
        TauKind::Quartic => TwistCurve::quartic(d)?,
        TauKind::Sextic => TwistCurve::sextic(d, 1)?,
    };
    let mut points = Vec::new();
    for k in divisors(n) {
        let s = pow_u(q, k)? + 1;
        let r = (qn1 / s) as usize;
        let u = &Poly::monomial(field, m.a, r) + &Poly::constant(field, m.b);
        let v = &Poly::monomial(field, m.c, r) + &Poly::constant(field, m.d);
        let (x, y) = match kind {
            TauKind::Quartic => (-&v.pow(s / 2), &u.pow(s / 2) * &v.pow(s / 4)),
            TauKind::Sextic => (-&v.pow(s / 3), u.pow(s / 2)),
        };
        let c = Construction::new(format!("tau_{k}"), curve.clone(), FPoint::affine(x, y))?;
        points.push((k, c));
    }
    Ok(TauPoints { matrix: Some(*m), status: "ok".into(), points })
}

/// `q^n` as a big integer, for degree bookkeeping.
pub fn big_power(q: u64, n: u32) -> BigUint {
    BigUint::from(q).pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn poly(f: &Field, t: &[(usize, i64)]) -> Poly {
        Poly::from_terms(f, t)
    }

    #[test]
    fn quadratic_main_points() {
        let f3 = f(3);
        let q1 = main_point_quadratic(&f3, 3, 1).unwrap();
        assert!(q1.verified());
        assert_eq!(q1.point, FPoint::affine(poly(&f3, &[(9, 1), (3, 1), (1, 1)]), Poly::one(&f3)));
        assert_eq!(q1.degrees().0, Some(9));
        let q3 = main_point_quadratic(&f3, 3, 3).unwrap();
        assert_eq!(q3.point, FPoint::affine(poly(&f3, &[(13, 1)]), poly(&f3, &[(6, 1)])));
        assert_eq!(q3.separable, Some(true));
        let f7 = f(7);
        let p = main_point_quadratic(&f7, 1, 1).unwrap();
        assert_eq!(p.point, FPoint::affine(poly(&f7, &[(3, 1)]), Poly::t(&f7)));
        assert!(main_point_quadratic(&f(5), 1, 1).is_err());
        assert!(main_point_quadratic(&f3, 4, 2).is_err());
    }

    #[test]
    fn cubic_main_points() {
        let f2 = f(2);
        let s1 = main_point_cubic(&f2, 3, 1).unwrap();
        assert_eq!(s1.point, FPoint::affine(Poly::one(&f2), poly(&f2, &[(4, 1), (2, 1), (1, 1)])));
        assert!(s1.verified());
        assert_eq!(s1.separable, Some(true));
        let s3 = main_point_cubic(&f2, 3, 3).unwrap();
        assert_eq!(s3.point, FPoint::affine(poly(&f2, &[(2, 1)]), poly(&f2, &[(7, 1)])));
        let f5 = f(5);
        let s = main_point_cubic(&f5, 1, 1).unwrap();
        assert_eq!(s.point, FPoint::affine(Poly::t(&f5), poly(&f5, &[(4, 1)])));
        assert!(main_point_cubic(&f(7), 1, 1).is_err());
    }

    #[test]
    fn general_points() {
        let f3 = f(3);
        let a0 = poly(&f3, &[(4, 1), (3, -1), (1, -1), (0, 1)]);
        let c = general_point_quadratic(&a0, 1).unwrap();
        assert!(c.verified());
        assert_eq!(c.point, FPoint::affine(poly(&f3, &[(27, 1), (1, -1)]), Poly::one(&f3)));
        let a0 = poly(&f3, &[(3, 1), (0, -1)]);
        let c = general_point_quadratic(&a0, 3).unwrap();
        assert_eq!(c.point, FPoint::affine(poly(&f3, &[(13, 1)]), poly(&f3, &[(6, 1)])));
        assert!(c.verified());
        let f2 = f(2);
        let c = general_point_cubic(&poly(&f2, &[(3, 1), (0, 1)]), 1).unwrap();
        assert!(c.verified());
    }

    #[test]
    fn translates_and_scales() {
        let f3 = f(3);
        let q1 = main_point_quadratic(&f3, 2, 1).unwrap();
        let ts = translates(&q1).unwrap();
        assert_eq!(ts.len(), 3);
        assert_eq!(ts[0].point, q1.point);
        assert!(ts.iter().all(|c| c.verified() && c.curve == q1.curve));
        let sc = scaled(&q1).unwrap();
        assert_eq!(sc.len(), 2);
        assert!(sc.iter().all(Construction::verified));
        let two_a = q1.curve.twist_poly().scale(f3.from_int(2));
        assert_eq!(sc[1].curve.twist_poly(), &two_a);
    }

    #[test]
    fn orthogonal_groups() {
        let f3 = f(3);
        let g = orthogonal_group(&f3).unwrap();
        assert_eq!(g.len(), 8);
        assert!(g.contains(&OrthMatrix::from_ints(&f3, [[1, 0], [0, 1]]).unwrap()));
        assert!(!g.iter().any(OrthMatrix::cd_nonzero));
        let f7 = f(7);
        let g7 = orthogonal_group(&f7).unwrap();
        assert_eq!(g7.len(), 16);
        assert!(g7.contains(&OrthMatrix::from_ints(&f7, [[2, 2], [2, 5]]).unwrap()));
        let f5 = f(5);
        assert_eq!(orthogonal_group(&f5).unwrap().len(), 8);
    }

    #[test]
    fn hermitian_identity() {
        let f7 = f(7);
        let m = OrthMatrix::from_ints(&f7, [[2, 2], [2, 5]]).unwrap();
        assert!(hermitian_identity_check(&f7, &m, 1).unwrap());
        let swap = OrthMatrix::from_ints(&f7, [[0, 1], [1, 0]]).unwrap();
        assert!(hermitian_identity_check(&f7, &swap, 2).unwrap());
        // a non-orthogonal matrix fails
        let bad = OrthMatrix { a: Fe(1), b: Fe(1), c: Fe(0), d: Fe(1) };
        assert!(!hermitian_identity_check(&f7, &bad, 1).unwrap());
    }

    #[test]
    fn tau_point_examples() {
        let f7 = f(7);
        let m = OrthMatrix::from_ints(&f7, [[2, 2], [2, 5]]).unwrap();
        let r = tau_points_with(&f7, 1, TauKind::Quartic, &m).unwrap();
        let (_, c) = &r.points[0];
        let u = poly(&f7, &[(1, 2), (0, 2)]);
        let v = poly(&f7, &[(1, 2), (0, 5)]);
        assert_eq!(c.point, FPoint::affine(-&v.pow(4), &u.pow(4) * &v.pow(2)));
        assert!(c.verified());

        let f11 = f(11);
        let m = OrthMatrix::from_ints(&f11, [[5, 8], [3, 5]]).unwrap();
        let r = tau_points_with(&f11, 1, TauKind::Sextic, &m).unwrap();
        let u = poly(&f11, &[(1, 5), (0, 8)]);
        let v = poly(&f11, &[(1, 3), (0, 5)]);
        assert_eq!(r.points[0].1.point, FPoint::affine(-&v.pow(4), u.pow(6)));
        assert!(r.points[0].1.verified());

        let empty = tau_points(&f(3), 1, TauKind::Quartic).unwrap();
        assert!(empty.points.is_empty() && empty.matrix.is_none());
        assert_eq!(empty.status, "no orthogonal matrix with cd != 0");
    }

    #[test]
    fn tau_points_over_several_divisors() {
        let f7 = f(7);
        let r = tau_points(&f7, 3, TauKind::Quartic).unwrap();
        assert_eq!(r.points.len(), 2);
        assert!(r.points.iter().all(|(_, c)| c.verified()));
        assert_ne!(r.points[0].1.point, r.points[1].1.point);
    }
}
