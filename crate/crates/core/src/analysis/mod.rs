//! Independent checks on `∞`-integral points of quadratic twists
//! `A(t) y^2 = f(x)`: the divisibility and degree bounds, the three
//! equivalent degree conditions, the map to the hyperelliptic cover and
//! the linear-independence certificate.

mod search;

use serde_json::{json, Value};

pub use search::{degree_window, hit_json, search_integral_points, SearchHit};

use crate::algebra::{Fe, Field, Poly};
use crate::curves::{is_supersingular, ConstantCurve, FPoint, Family, TwistCurve};
use crate::{json as js, Error, Result};

fn integral_parts(p: &FPoint) -> Result<(Poly, Poly)> {
    match p.polys() {
        Some((x, y)) => Ok((x.clone(), y.clone())),
        None => Err(Error::Precondition("point must be affine with polynomial coordinates".into())),
    }
}

fn quadratic_parts(c: &TwistCurve) -> Result<(Poly, Poly)> {
    match c.family() {
        Family::Quadratic { a, .. } => Ok((a.clone(), c.cubic_f().expect("quadratic"))),
        _ => Err(Error::Precondition("a quadratic twist is required".into())),
    }
}

/// One named check and its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

fn check(name: impl Into<String>, ok: bool) -> Check {
    Check { name: name.into(), ok }
}

/// `G | F'` and `d/3 <= deg F < d - 1`.
#[derive(Clone, Debug)]
pub struct GdfReport {
    pub checks: Vec<Check>,
}

impl GdfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn to_json(&self) -> Value {
        let m: serde_json::Map<String, Value> = self.checks.iter().map(|c| (c.name.clone(), json!(c.ok))).collect();
        Value::Object(m)
    }
}

pub fn check_gdf(curve: &TwistCurve, p: &FPoint) -> Result<GdfReport> {
    let (a, _) = quadratic_parts(curve)?;
    let (f, g) = integral_parts(p)?;
    if !curve.contains(p) {
        return Err(Error::OffCurve);
    }
    let fp = f.derivative();
    if fp.is_zero() {
        return Err(Error::Precondition("F' = 0".into()));
    }
    let d = a.deg().expect("nonzero A");
    let df = f.deg().expect("F' != 0");
    Ok(GdfReport {
        checks: vec![
            check("G_divides_Fprime", g.divides(&fp)),
            check("lower_bound", d <= 3 * df),
            check("upper_bound", df + 1 < d),
        ],
    })
}

/// Roots of `f`, the splitting `F - α_i = N_i S_i^2` and the constants
/// `β_k = (α_k - α_i)(α_k - α_j) / γ`.
#[derive(Clone, Debug)]
pub struct FactorStructure {
    pub alpha: [Fe; 3],
    pub n: [Poly; 3],
    pub s: [Poly; 3],
    pub beta: [Fe; 3],
    pub gamma: Fe,
}

impl FactorStructure {
    fn new(a: &Poly, f: &Poly, big_f: &Poly, g: &Poly, gamma: Fe) -> Result<FactorStructure> {
        let field = a.field();
        let mut roots = f.roots()?;
        roots.dedup();
        let alpha: [Fe; 3] = roots
            .try_into()
            .map_err(|_| Error::Precondition(format!("f = {f} does not split into distinct roots")))?;
        let mut n = Vec::new();
        let mut s = Vec::new();
        for &al in &alpha {
            let fi = big_f - &Poly::constant(field, al);
            let ni = a.gcd(&fi).scale(fi.leading());
            let si = fi
                .div_exact(&ni)?
                .sqrt()
                .ok_or_else(|| Error::Inconsistent(format!("(F - {}) / N is not a square", al.index())))?;
            n.push(ni);
            s.push(si);
        }
        let beta = [0, 1, 2].map(|k| {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            let num = field.mul(field.sub(alpha[k], alpha[i]), field.sub(alpha[k], alpha[j]));
            field.div(num, gamma).expect("gamma != 0")
        });
        let st = FactorStructure { alpha, n: n.try_into().unwrap(), s: s.try_into().unwrap(), beta, gamma };
        let prod_n = &(&st.n[0] * &st.n[1]) * &st.n[2];
        let prod_s = &(&st.s[0] * &st.s[1]) * &st.s[2];
        if prod_n.monic() != a.monic() || prod_s.monic() != g.monic() {
            return Err(Error::Inconsistent("A != N0 N1 N2 or G != S0 S1 S2 up to units".into()));
        }
        Ok(st)
    }

    /// `β` for the two indices with the smallest `deg S_i`.
    fn low_pair(&self) -> (usize, usize) {
        let mut idx = [0usize, 1, 2];
        idx.sort_by_key(|&i| std::cmp::Reverse(self.s[i].deg()));
        (idx[1], idx[2])
    }

    pub fn to_json(&self) -> Value {
        let f = self.n[0].field();
        json!({
            "alpha": self.alpha.iter().map(|&x| js::fe(f, x)).collect::<Vec<_>>(),
            "N": self.n.iter().map(js::poly).collect::<Vec<_>>(),
            "S": self.s.iter().map(js::poly).collect::<Vec<_>>(),
            "beta": self.beta.iter().map(|&x| js::fe(f, x)).collect::<Vec<_>>(),
            "gamma": js::fe(f, self.gamma),
        })
    }
}

/// Isomorphism class of `y^2 = f(x)` as far as the degree conditions
/// care: whether the roots of `f` lie in `F_q` in arithmetic progression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoClass {
    /// `f = x^3 - x` on the nose.
    Standard,
    /// Roots `c - a, c, c + a`: isomorphic to `y^2 = x^3 - a^2 x`, a twist
    /// of `x^3 - x`.
    Progression { center: Fe, gap: Fe },
    /// Split, not in progression.
    Other,
    NotSplit,
}

impl IsoClass {
    pub fn of(f: &Poly) -> Result<IsoClass> {
        let field = f.field();
        if f == &Poly::from_terms(field, &[(3, 1), (1, -1)]) {
            return Ok(IsoClass::Standard);
        }
        let mut roots = f.roots()?;
        roots.dedup();
        if roots.len() != 3 {
            return Ok(IsoClass::NotSplit);
        }
        for k in 0..3 {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            let (c, u, v) = (roots[k], roots[i], roots[j]);
            if field.add(c, c) == field.add(u, v) {
                return Ok(IsoClass::Progression { center: c, gap: field.sub(v, c) });
            }
        }
        Ok(IsoClass::Other)
    }

    pub fn is_twist_of_standard(&self) -> bool {
        matches!(self, IsoClass::Standard | IsoClass::Progression { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            IsoClass::Standard => "x^3 - x",
            IsoClass::Progression { .. } => "a(x^3 - x)",
            IsoClass::Other => "other",
            IsoClass::NotSplit => "not split",
        }
    }
}

/// The three conditions `2 deg F <= d - 1`, `2 deg G <= deg F - 1`,
/// `G^2 = β F'`, and what follows from them.
#[derive(Clone, Debug)]
pub struct EquivReport {
    pub cond_a: bool,
    pub cond_b: bool,
    pub cond_c: bool,
    pub beta: Option<Fe>,
    pub structure: Option<FactorStructure>,
    pub beta_agreement: Option<bool>,
    pub class: IsoClass,
}

impl EquivReport {
    pub fn consistent(&self) -> bool {
        self.cond_a == self.cond_b && self.cond_b == self.cond_c
    }

    /// Equivalence, plus `β = β_i = β_j` and the isomorphism class when
    /// the conditions hold.
    pub fn passed(&self) -> bool {
        self.consistent() && (!self.cond_a || (self.beta_agreement != Some(false) && self.class.is_twist_of_standard()))
    }

    pub fn to_json(&self, field: &Field) -> Value {
        json!({
            "condA": self.cond_a,
            "condB": self.cond_b,
            "condC": self.cond_c,
            "consistent": self.consistent(),
            "beta": self.beta.map(|b| js::fe(field, b)),
            "beta_agreement": self.beta_agreement,
            "structure": self.structure.as_ref().map(FactorStructure::to_json),
            "iso_classification": self.class.name(),
        })
    }
}

/// `β` with `G^2 = β F'`, if any.
pub fn beta_of(f: &Poly, g: &Poly) -> Option<Fe> {
    let fp = f.derivative();
    if fp.is_zero() {
        return None;
    }
    let g2 = g * g;
    let beta = g2.field().div(g2.leading(), fp.leading()).ok()?;
    (!beta.is_zero() && fp.scale(beta) == g2).then_some(beta)
}

pub fn eqiv_conditions(curve: &TwistCurve, p: &FPoint) -> Result<EquivReport> {
    let (a, f) = quadratic_parts(curve)?;
    let field = a.field();
    let d = a.deg().expect("nonzero A");
    if d % 2 == 0 {
        return Err(Error::Precondition("A must have odd degree".into()));
    }
    let mut roots = a.roots()?;
    roots.dedup();
    if roots.len() != d {
        return Err(Error::Precondition(format!("A = {a} does not split completely over {field}")));
    }
    let ap = a.derivative();
    if !ap.is_constant() || ap.is_zero() {
        return Err(Error::Precondition("A' must be a nonzero constant".into()));
    }
    let gamma = ap.coeff(0);
    let (big_f, g) = integral_parts(p)?;
    if !curve.contains(p) {
        return Err(Error::OffCurve);
    }
    if big_f.derivative().is_zero() {
        return Err(Error::Precondition("F' = 0".into()));
    }
    let df = big_f.deg().expect("F' != 0");
    let dg = g.deg().expect("G != 0 when F is non-constant");
    let beta = beta_of(&big_f, &g);
    let cond_a = 2 * df < d;
    let cond_b = 2 * dg < df;
    let cond_c = beta.is_some();
    let class = IsoClass::of(&f)?;
    let (structure, beta_agreement) = if cond_a || cond_b || cond_c {
        let st = FactorStructure::new(&a, &f, &big_f, &g, gamma)?;
        let agree = beta.map(|b| {
            let (i, j) = st.low_pair();
            st.beta[i] == b && st.beta[j] == b
        });
        (Some(st), agree)
    } else {
        (None, None)
    };
    Ok(EquivReport { cond_a, cond_b, cond_c, beta, structure, beta_agreement, class })
}

/// `(F, G) -> (F(t), s G(t))` on `y^2 = f(x)` over the function field of
/// `s^2 = A(t)`.
#[derive(Clone, Debug)]
pub struct GammaMap {
    /// `None` for the point at infinity.
    pub x: Option<crate::RatFunc>,
    /// The coefficient of `s` in the `y` coordinate.
    pub y_over_s: Option<crate::RatFunc>,
    pub identity_holds: bool,
}

impl GammaMap {
    pub fn to_json(&self) -> Value {
        match (&self.x, &self.y_over_s) {
            (Some(x), Some(y)) => json!({
                "x": js::ratfunc(x),
                "y": {"s": js::ratfunc(y)},
                "identity_holds": self.identity_holds,
            }),
            _ => json!({"point": "infinity", "identity_holds": self.identity_holds}),
        }
    }
}

pub fn gamma_map(curve: &TwistCurve, p: &FPoint) -> Result<GammaMap> {
    let (a, f) = quadratic_parts(curve)?;
    let (x, y) = match p {
        FPoint::Infinity => return Ok(GammaMap { x: None, y_over_s: None, identity_holds: true }),
        FPoint::Affine { x, y } => (x, y),
    };
    // (s G)^2 = s^2 G^2 with s^2 = A
    let lhs = crate::RatFunc::from(a).mul(&y.mul(y));
    let fx = {
        let x2 = x.mul(x);
        let mut acc = crate::RatFunc::zero(x.field());
        for (i, pw) in [crate::RatFunc::one(x.field()), x.clone(), x2.clone(), x2.mul(x)].iter().enumerate() {
            acc = acc.add(&pw.scale(f.coeff(i)));
        }
        acc
    };
    if lhs != fx {
        return Err(Error::OffCurve);
    }
    Ok(GammaMap { x: Some(x.clone()), y_over_s: Some(y.clone()), identity_holds: true })
}

/// Rank of the pullback coefficients `Φ_k = β_k G_k`.
#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub rank: usize,
    pub independent: bool,
    pub betas: Vec<Fe>,
    pub phis: Vec<Poly>,
    pub point_count: u64,
    pub trace: i64,
}

impl IndependenceReport {
    pub fn to_json(&self, field: &Field) -> Value {
        json!({
            "rank": self.rank,
            "independent": self.independent,
            "points": self.phis.len(),
            "beta": self.betas.iter().map(|&b| js::fe(field, b)).collect::<Vec<_>>(),
            "Phi": self.phis.iter().map(js::poly).collect::<Vec<_>>(),
            "supersingular": {"count": self.point_count, "trace": self.trace},
        })
    }
}

/// Rank over `F_q` of the coefficient vectors of `polys`.
pub fn rank_over_field(field: &Field, polys: &[Poly]) -> usize {
    let width = polys.iter().filter_map(Poly::deg).max().map_or(0, |d| d + 1);
    let mut rows: Vec<Vec<Fe>> = polys.iter().map(|p| (0..width).map(|i| p.coeff(i)).collect()).collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = field.inv(rows[rank][col]).expect("nonzero pivot");
        let pivot: Vec<Fe> = rows[rank].iter().map(|&x| field.mul(x, inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let c = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot) {
                    *x = field.sub(*x, field.mul(c, pv));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Certifies `Z`-linear independence of integral points through the
/// `F_q`-rank of their pullback coefficients. Requires the constant curve
/// to be supersingular and every point to satisfy `F' = β G^2`.
pub fn independence_certificate(curve: &TwistCurve, points: &[FPoint]) -> Result<IndependenceReport> {
    let (_, f) = quadratic_parts(curve)?;
    let field = curve.field();
    let e = ConstantCurve::from_cubic(&f)?;
    if !is_supersingular(&e)? {
        return Err(Error::Precondition(format!("y^2 = {f} is not supersingular")));
    }
    let n = e.count_points()?;
    let trace = field.order() as i64 + 1 - n as i64;
    let mut betas = Vec::new();
    let mut phis = Vec::new();
    for p in points {
        if !curve.contains(p) {
            return Err(Error::OffCurve);
        }
        let (big_f, g) = integral_parts(p)?;
        let fp = big_f.derivative();
        let g2 = &g * &g;
        let beta = (!g.is_zero())
            .then(|| field.div(fp.leading(), g2.leading()).ok())
            .flatten()
            .filter(|b| !b.is_zero() && g2.scale(*b) == fp)
            .ok_or_else(|| Error::Precondition(format!("F' is not a unit multiple of G^2 for F = {big_f}")))?;
        phis.push(g.scale(beta));
        betas.push(beta);
    }
    let rank = rank_over_field(field, &phis);
    Ok(IndependenceReport { rank, independent: rank == points.len(), betas, phis, point_count: n, trace })
}
