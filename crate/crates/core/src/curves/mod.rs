//! Twist models over `F_q(t)`, points with rational-function coordinates,
//! the generalized Weierstrass group law and the descended Frobenius.

mod frobenius;
mod weierstrass;

use std::fmt;

use crate::algebra::{Fe, Field, Poly, RatFunc};
use crate::{Error, Result};

pub use frobenius::{descent_exponent, TwistExponents};
pub use weierstrass::{is_supersingular, ConstantCurve, GWModel, Substitution};

/// The four twist shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `A(t) y^2 = x^3 + c2 x^2 + c1 x + c0`; `f` holds `[c0, c1, c2]`.
    Quadratic { a: Poly, f: [Fe; 3] },
    /// `y^2 - y = A(t) x^3`.
    Cubic { a: Poly },
    /// `y^2 = x^3 - D(t) x`.
    Quartic { d: Poly },
    /// `y^2 = sign * x^3 + D(t)` with `sign = +1` or `-1`.
    Sextic { d: Poly, sign: i8 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Quadratic { .. } => "quadratic",
            Family::Cubic { .. } => "cubic",
            Family::Quartic { .. } => "quartic",
            Family::Sextic { .. } => "sextic",
        }
    }
}

/// A twist of a constant elliptic curve over `F_q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistCurve {
    field: Field,
    family: Family,
}

/// A point with rational-function coordinates, or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FPoint {
    Infinity,
    Affine { x: RatFunc, y: RatFunc },
}

impl FPoint {
    pub fn affine(x: impl Into<RatFunc>, y: impl Into<RatFunc>) -> FPoint {
        FPoint::Affine { x: x.into(), y: y.into() }
    }

    pub fn x(&self) -> Option<&RatFunc> {
        match self {
            FPoint::Affine { x, .. } => Some(x),
            FPoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&RatFunc> {
        match self {
            FPoint::Affine { y, .. } => Some(y),
            FPoint::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, FPoint::Infinity)
    }

    /// Both coordinates are polynomials in `t`.
    pub fn is_integral(&self) -> bool {
        match self {
            FPoint::Affine { x, y } => x.is_poly() && y.is_poly(),
            FPoint::Infinity => false,
        }
    }

    /// Constant points, including infinity.
    pub fn is_constant(&self) -> bool {
        match self {
            FPoint::Affine { x, y } => x.is_constant() && y.is_constant(),
            FPoint::Infinity => true,
        }
    }

    /// Polynomial coordinates, when the point is integral.
    pub fn polys(&self) -> Option<(&Poly, &Poly)> {
        match self {
            FPoint::Affine { x, y } => Some((x.as_poly()?, y.as_poly()?)),
            FPoint::Infinity => None,
        }
    }

    /// Substitutes `t -> c t` in both coordinates.
    pub fn scale_arg(&self, c: Fe) -> FPoint {
        match self {
            FPoint::Affine { x, y } => FPoint::Affine { x: x.scale_arg(c), y: y.scale_arg(c) },
            FPoint::Infinity => FPoint::Infinity,
        }
    }

    /// Substitutes `t -> b(t)` in both coordinates.
    pub fn compose_poly(&self, b: &Poly) -> Result<FPoint> {
        Ok(match self {
            FPoint::Affine { x, y } => FPoint::Affine { x: x.compose_poly(b)?, y: y.compose_poly(b)? },
            FPoint::Infinity => FPoint::Infinity,
        })
    }
}

impl fmt::Display for FPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FPoint::Infinity => write!(f, "infinity"),
            FPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// A cleared-denominator identity `lhs = rhs` witnessing that a point lies
/// on a curve. Consumers check it with [`Certificate::holds`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub equation: String,
    pub lhs: Poly,
    pub rhs: Poly,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn nonzero(p: &Poly, what: &str) -> Result<()> {
    if p.is_zero() {
        Err(Error::Precondition(format!("{what} must be nonzero")))
    } else {
        Ok(())
    }
}

impl TwistCurve {
    /// `A(t) y^2 = f(x)` for a monic squarefree cubic `f` over `F_q`.
    pub fn quadratic(a: Poly, f: &Poly) -> Result<TwistCurve> {
        let field = a.field().clone();
        a.same_field(f)?;
        if field.p() == 2 {
            return Err(Error::Precondition("quadratic twists need odd characteristic".into()));
        }
        if !a.is_squarefree() {
            return Err(Error::Precondition(format!("A = {a} is not squarefree")));
        }
        if f.deg() != Some(3) || !f.is_monic() {
            return Err(Error::Precondition(format!("f = {f} must be a monic cubic")));
        }
        if !f.is_squarefree() {
            return Err(Error::Precondition(format!("f = {f} is not squarefree")));
        }
        let c = TwistCurve { field, family: Family::Quadratic { a, f: [f.coeff(0), f.coeff(1), f.coeff(2)] } };
        Ok(c)
    }

    /// `y^2 - y = A(t) x^3`.
    pub fn cubic(a: Poly) -> Result<TwistCurve> {
        nonzero(&a, "A")?;
        let field = a.field().clone();
        if field.p() == 3 {
            return Err(Error::Precondition("y^2 - y = A x^3 is singular in characteristic 3".into()));
        }
        Ok(TwistCurve { field, family: Family::Cubic { a } })
    }

    /// `y^2 = x^3 - D(t) x`.
    pub fn quartic(d: Poly) -> Result<TwistCurve> {
        nonzero(&d, "D")?;
        let field = d.field().clone();
        if field.p() == 2 {
            return Err(Error::Precondition("quartic twists need odd characteristic".into()));
        }
        Ok(TwistCurve { field, family: Family::Quartic { d } })
    }

    /// `y^2 = sign * x^3 + D(t)`.
    pub fn sextic(d: Poly, sign: i8) -> Result<TwistCurve> {
        nonzero(&d, "D")?;
        let field = d.field().clone();
        if field.p() <= 3 {
            return Err(Error::Precondition("sextic twists need characteristic at least 5".into()));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::Precondition("sextic sign must be +1 or -1".into()));
        }
        Ok(TwistCurve { field, family: Family::Sextic { d, sign } })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// The twisting polynomial (`A` or `D`).
    pub fn twist_poly(&self) -> &Poly {
        match &self.family {
            Family::Quadratic { a, .. } | Family::Cubic { a } => a,
            Family::Quartic { d } | Family::Sextic { d, .. } => d,
        }
    }

    /// The cubic `f` of a quadratic twist as a polynomial in `x`.
    pub fn cubic_f(&self) -> Option<Poly> {
        match &self.family {
            Family::Quadratic { f, .. } => Some(Poly::new(&self.field, vec![f[0], f[1], f[2], Fe::ONE])),
            _ => None,
        }
    }

    /// The same family with a different twisting polynomial.
    pub fn with_twist(&self, t: Poly) -> Result<TwistCurve> {
        match &self.family {
            Family::Quadratic { .. } => TwistCurve::quadratic(t, &self.cubic_f().expect("quadratic")),
            Family::Cubic { .. } => TwistCurve::cubic(t),
            Family::Quartic { .. } => TwistCurve::quartic(t),
            Family::Sextic { sign, .. } => TwistCurve::sextic(t, *sign),
        }
    }

    /// The cleared-denominator defining identity evaluated at `p`.
    pub fn certificate(&self, p: &FPoint) -> Certificate {
        let equation = self.to_string();
        let (x, y) = match p {
            FPoint::Infinity => {
                let z = Poly::zero(&self.field);
                return Certificate { equation, lhs: z.clone(), rhs: z };
            }
            FPoint::Affine { x, y } => (x, y),
        };
        let (xn, xd, yn, yd) = (x.num(), x.den(), y.num(), y.den());
        let xd2 = xd * xd;
        let xd3 = &xd2 * xd;
        let yd2 = yd * yd;
        let xn2 = xn * xn;
        let xn3 = &xn2 * xn;
        let f = &self.field;
        let (lhs, rhs) = match &self.family {
            Family::Quadratic { a, f: c } => {
                let cubic = &(&(&xn3 + &(&xn2 * xd).scale(c[2])) + (&(xn * &xd2).scale(c[1]))) + &xd3.scale(c[0]);
                (&(a * &(yn * yn)) * &xd3, &cubic * &yd2)
            }
            Family::Cubic { a } => (&(&(yn * yn) - &(yn * yd)) * &xd3, &(a * &xn3) * &yd2),
            Family::Quartic { d } => (&(yn * yn) * &xd3, &(&xn3 - &(&(d * xn) * &xd2)) * &yd2),
            Family::Sextic { d, sign } => {
                let s = f.from_int(*sign as i64);
                (&(yn * yn) * &xd3, &(&xn3.scale(s) + &(d * &xd3)) * &yd2)
            }
        };
        Certificate { equation, lhs, rhs }
    }

    /// Exact membership test.
    pub fn contains(&self, p: &FPoint) -> bool {
        self.certificate(p).holds()
    }

    fn require_on(&self, p: &FPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OffCurve)
        }
    }

    /// Generalized Weierstrass model and the substitution into it.
    pub fn to_weierstrass(&self) -> GWModel {
        GWModel::of(self)
    }

    pub fn neg(&self, p: &FPoint) -> Result<FPoint> {
        self.require_on(p)?;
        let m = self.to_weierstrass();
        Ok(m.sub().pull(&m.neg(&m.sub().push(p))))
    }

    /// Group law, through the Weierstrass model.
    pub fn add(&self, p: &FPoint, q: &FPoint) -> Result<FPoint> {
        self.require_on(p)?;
        self.require_on(q)?;
        let m = self.to_weierstrass();
        let s = m.sub();
        Ok(s.pull(&m.add(&s.push(p), &s.push(q))?))
    }

    /// `n P` for any integer `n`.
    pub fn mul(&self, n: i64, p: &FPoint) -> Result<FPoint> {
        self.require_on(p)?;
        let m = self.to_weierstrass();
        let s = m.sub();
        Ok(s.pull(&m.mul(n, &s.push(p))?))
    }
}

impl fmt::Display for TwistCurve {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Quadratic { a, f } => {
                write!(out, "({a}) y^2 = x^3")?;
                for (i, c) in f.iter().enumerate().rev() {
                    if !c.is_zero() {
                        match i {
                            0 => write!(out, " + {}", c.index())?,
                            1 => write!(out, " + {}*x", c.index())?,
                            _ => write!(out, " + {}*x^2", c.index())?,
                        }
                    }
                }
                Ok(())
            }
            Family::Cubic { a } => write!(out, "y^2 - y = ({a}) x^3"),
            Family::Quartic { d } => write!(out, "y^2 = x^3 - ({d}) x"),
            Family::Sextic { d, sign } => {
                let s = if *sign < 0 { "-" } else { "" };
                write!(out, "y^2 = {s}x^3 + ({d})")
            }
        }
    }
}
