//! Delsarte surfaces, Fermat covers and monomial maps.
//!
//! A Delsarte surface `X_A` is `sum_i c_i prod_j x_j^{a_ij} = 0` with an
//! invertible integer exponent matrix `A`, coordinates ordered
//! `(x, y, z, t)`. A monomial map `x_j = prod_k u_k^{b_jk}` sends the
//! diagonal surface `sum_i c_i u_i^{N_i} = 0` into `X_A` exactly when
//! `A B = diag(N) + W` with every row of `W` equal: the pullback of monomial
//! `i` is then `u_i^{N_i}` times the common factor `u^w`.

mod registry;

use std::fmt;

use num_integer::Integer;

use crate::algebra::{Fe, Field, Poly, RatFunc};
use crate::curves::FPoint;
use crate::{Error, Result};

pub use registry::{registry, LineCase, LineOutcome, RegistryEntry, RegistryReport};

/// A 4x4 integer matrix, row-major.
pub type Mat4 = [[i64; 4]; 4];

pub const IDENTITY: Mat4 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

fn det3(m: [[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn minor(a: &Mat4, r: usize, c: usize) -> i128 {
    let mut m = [[0i128; 3]; 3];
    let mut ri = 0;
    for i in 0..4 {
        if i == r {
            continue;
        }
        let mut ci = 0;
        for j in 0..4 {
            if j == c {
                continue;
            }
            m[ri][ci] = a[i][j] as i128;
            ci += 1;
        }
        ri += 1;
    }
    det3(m)
}

pub fn det(a: &Mat4) -> i128 {
    (0..4).map(|j| if j % 2 == 0 { 1 } else { -1 } * a[0][j] as i128 * minor(a, 0, j)).sum()
}

/// Adjugate: `A adj(A) = det(A) I`.
pub fn adjugate(a: &Mat4) -> [[i128; 4]; 4] {
    let mut out = [[0i128; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            *v = s * minor(a, j, i);
        }
    }
    out
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Least `d > 0` with `d A^{-1} C` integral, and that matrix.
pub fn fermat_cover(a: &Mat4, c: &Mat4) -> Result<(i64, Mat4)> {
    let dt = det(a);
    if dt == 0 {
        return Err(Error::Precondition("exponent matrix is singular".into()));
    }
    let adj = adjugate(a);
    let mut ac = [[0i128; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            ac[i][j] = (0..4).map(|k| adj[i][k] * c[k][j] as i128).sum();
        }
    }
    let g = ac.iter().flatten().fold(dt.abs(), |g, &x| g.gcd(&x));
    let d = dt.abs() / g;
    let mut b = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            b[i][j] = i64::try_from(d * ac[i][j] / dt).map_err(|_| Error::Precondition("entries overflow".into()))?;
        }
    }
    Ok((d as i64, b))
}

/// `A B - diag(N)` has equal rows: returns `(N, w)` when it does.
pub fn map_certificate(a: &Mat4, b: &Mat4) -> Option<([i64; 4], [i64; 4])> {
    let ab = mat_mul(a, b);
    // w_k is read off any row i != k
    let mut w = [0i64; 4];
    for k in 0..4 {
        w[k] = ab[(k + 1) % 4][k];
    }
    let mut n = [0i64; 4];
    for i in 0..4 {
        for k in 0..4 {
            if i == k {
                n[i] = ab[i][i] - w[i];
            } else if ab[i][k] != w[k] {
                return None;
            }
        }
    }
    Some((n, w))
}

/// `sum_i c_i prod_j x_j^{a_ij} = 0` over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelsarteSurface {
    pub field: Field,
    pub a: Mat4,
    pub c: [Fe; 4],
}

impl DelsarteSurface {
    pub fn new(field: &Field, a: Mat4, c: [i64; 4]) -> Result<DelsarteSurface> {
        let d = det(&a);
        if d.rem_euclid(field.p() as i128) == 0 {
            return Err(Error::Precondition(format!("det A = {d} vanishes in {field}")));
        }
        if a.iter().flatten().any(|&x| x < 0) {
            return Err(Error::Precondition("exponents must be non-negative".into()));
        }
        Ok(DelsarteSurface { field: field.clone(), a, c: c.map(|x| field.from_int(x)) })
    }

    /// `sum c_i u_i^{N_i}`, the diagonal surface covering `self`.
    pub fn diagonal(field: &Field, n: [i64; 4], c: [i64; 4]) -> Result<DelsarteSurface> {
        let mut a = [[0i64; 4]; 4];
        for i in 0..4 {
            a[i][i] = n[i];
        }
        DelsarteSurface::new(field, a, c)
    }

    /// Whether the parametrized curve lies on the surface, as an identity
    /// of rational functions in `t`.
    pub fn contains(&self, g: &ParamCurve) -> bool {
        let f = &self.field;
        let mut acc = RatFunc::zero(f);
        for i in 0..4 {
            let mut term = RatFunc::constant(f, self.c[i]);
            for j in 0..4 {
                term = term.mul(&g.0[j].pow_i(self.a[i][j]).expect("non-negative exponent"));
            }
            acc = acc.add(&term);
        }
        acc.is_zero()
    }
}

/// Four rational functions of `t`, a curve in projective 3-space (or in the
/// `(x, y, z, t)` chart of an elliptic surface).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamCurve(pub [RatFunc; 4]);

impl ParamCurve {
    /// Coordinates given as `(coefficient, exponent)` Laurent monomials.
    pub fn monomials(field: &Field, m: [(Fe, i64); 4]) -> ParamCurve {
        ParamCurve(m.map(|(c, e)| RatFunc::laurent_monomial(field, c, e)))
    }

    /// Scales every coordinate by the same rational function.
    pub fn scale(&self, s: &RatFunc) -> ParamCurve {
        ParamCurve(self.0.clone().map(|c| c.mul(s)))
    }
}

impl fmt::Display for ParamCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// Coordinatewise `x_j = prod_k g_k^{b_jk}`.
pub fn apply_map(b: &Mat4, g: &ParamCurve) -> Result<ParamCurve> {
    let f = g.0[0].field().clone();
    let mut out: [RatFunc; 4] = std::array::from_fn(|_| RatFunc::one(&f));
    for j in 0..4 {
        for k in 0..4 {
            let e = b[j][k];
            if e == 0 {
                continue;
            }
            if g.0[k].is_zero() && e < 0 {
                return Err(Error::Precondition(format!(
                    "coordinate {k} vanishes but enters with exponent {e}"
                )));
            }
            out[j] = out[j].mul(&g.0[k].pow_i(e)?);
        }
    }
    Ok(ParamCurve(out))
}

/// `([X/Z : Y/Z : 1], T)` read from an image curve in the `(x, y, z, t)`
/// chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multisection {
    pub x: RatFunc,
    pub y: RatFunc,
    pub base: RatFunc,
}

impl Multisection {
    pub fn from_image(img: &ParamCurve) -> Result<Multisection> {
        let [x, y, z, t] = &img.0;
        if z.is_zero() {
            return Err(Error::Malformed("multisection with z = 0".into()));
        }
        Ok(Multisection { x: x.div(z)?, y: y.div(z)?, base: t.clone() })
    }

    pub fn from_monomials(field: &Field, x: (Fe, i64), y: (Fe, i64), base: i64) -> Multisection {
        Multisection {
            x: RatFunc::laurent_monomial(field, x.0, x.1),
            y: RatFunc::laurent_monomial(field, y.0, y.1),
            base: RatFunc::laurent_monomial(field, Fe::ONE, base),
        }
    }

    /// A constant base means the curve was mapped into a single fiber.
    pub fn is_fiber(&self) -> bool {
        self.base.is_constant()
    }

    /// `e` with base exactly `t^e`, if so.
    pub fn base_exponent(&self) -> Option<i64> {
        let (nc, ne) = self.base.num().as_monomial()?;
        let (dc, de) = self.base.den().as_monomial()?;
        (nc == Fe::ONE && dc == Fe::ONE).then_some(ne as i64 - de as i64)
    }

    /// The same multisection after `t -> 1/t`.
    pub fn invert_parameter(&self) -> Multisection {
        Multisection { x: invert_t(&self.x), y: invert_t(&self.y), base: invert_t(&self.base) }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "x": crate::json::ratfunc(&self.x),
            "y": crate::json::ratfunc(&self.y),
            "base": crate::json::ratfunc(&self.base),
        })
    }
}

impl fmt::Display for Multisection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{} : {} : 1], {})", self.x, self.y, self.base)
    }
}

fn reverse_poly(p: &Poly) -> Poly {
    let mut c = p.coeffs().to_vec();
    c.reverse();
    Poly::new(p.field(), c)
}

// r(1/t) as a normalized rational function
fn invert_t(r: &RatFunc) -> RatFunc {
    let f = r.field();
    let (n, d) = (r.num(), r.den());
    let dn = n.deg().unwrap_or(0) as i64;
    let dd = d.deg().unwrap_or(0) as i64;
    let shift = RatFunc::laurent_monomial(f, Fe::ONE, dd - dn);
    RatFunc::new(reverse_poly(n), reverse_poly(d)).expect("nonzero den").mul(&shift)
}

// P(t) = sum c_i t^i with every i divisible by e, rewritten in u = t^e
fn compress(p: &Poly, e: usize) -> Option<Poly> {
    let mut v = vec![Fe::ZERO; p.deg().map_or(0, |d| d / e + 1)];
    for (i, &c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i % e != 0 {
            return None;
        }
        v[i / e] = c;
    }
    Some(Poly::new(p.field(), v))
}

fn substitute(r: &RatFunc, e: i64) -> Option<RatFunc> {
    let r = if e < 0 { invert_t(r) } else { r.clone() };
    let k = e.unsigned_abs() as usize;
    let num = compress(r.num(), k)?;
    let den = compress(r.den(), k)?;
    Some(RatFunc::new(num, den).expect("nonzero den"))
}

/// Turns a multisection with base `t^e` into a section over `F_q(u)`,
/// `u = t^e`, when every exponent in `x` and `y` is divisible by `e`.
pub fn substitute_section(m: &Multisection) -> Result<Option<FPoint>> {
    if m.is_fiber() {
        return Err(Error::Malformed("constant base: the curve lies in a fiber".into()));
    }
    let Some(e) = m.base_exponent() else {
        return Err(Error::Malformed(format!("base {} is not a pure power of t", m.base)));
    };
    match (substitute(&m.x, e), substitute(&m.y, e)) {
        (Some(x), Some(y)) => Ok(Some(FPoint::Affine { x, y })),
        _ => Ok(None),
    }
}
