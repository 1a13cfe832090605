use std::fmt;

use num_bigint::BigUint;

use super::{Fe, Field, Poly};
use crate::{Error, Result};

/// A normalized quotient `num / den`: `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        let den = Poly::one(p.field());
        RatFunc { num: p, den }
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        num.same_field(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        if !den.is_monic() {
            let inv = den.field().inv(den.leading())?;
            num = num.scale(inv);
            den = den.scale(inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn zero(field: &Field) -> RatFunc {
        Poly::zero(field).into()
    }

    pub fn one(field: &Field) -> RatFunc {
        Poly::one(field).into()
    }

    pub fn constant(field: &Field, c: Fe) -> RatFunc {
        Poly::constant(field, c).into()
    }

    /// `c t^n` for any integer `n`.
    pub fn laurent_monomial(field: &Field, c: Fe, n: i64) -> RatFunc {
        if n >= 0 {
            Poly::monomial(field, c, n as usize).into()
        } else {
            RatFunc { num: Poly::constant(field, c), den: Poly::monomial(field, Fe::ONE, (-n) as usize) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is 1.
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.den == other.den {
            return RatFunc::new(&self.num + &other.num, self.den.clone()).expect("nonzero den");
        }
        RatFunc::new(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
            .expect("nonzero den")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_poly() && other.is_poly() {
            return (&self.num * &other.num).into();
        }
        RatFunc::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero den")
    }

    pub fn scale(&self, c: Fe) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone()).expect("nonzero den")
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow_i(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_big(&BigUint::from(e.unsigned_abs())))
    }

    pub fn pow_big(&self, e: &BigUint) -> RatFunc {
        // coprime inputs stay coprime under powering
        let num = self.num.pow_big(e);
        let den = self.den.pow_big(e);
        let lead = den.leading();
        if lead == Fe::ONE {
            RatFunc { num, den }
        } else {
            RatFunc::new(num, den).expect("nonzero den")
        }
    }

    /// `self^{p^j}`.
    pub fn frobenius_power(&self, j: u32) -> RatFunc {
        RatFunc { num: self.num.frobenius_power(j), den: self.den.frobenius_power(j) }
    }

    /// The unique `g` with `g^{p^j} = self`, if any.
    pub fn frobenius_root(&self, j: u32) -> Option<RatFunc> {
        Some(RatFunc { num: self.num.frobenius_root(j)?, den: self.den.frobenius_root(j)? })
    }

    /// Quotient-rule derivative.
    pub fn derivative(&self) -> RatFunc {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(n, &self.den * &self.den).expect("nonzero den")
    }

    /// `self(c t)`.
    pub fn scale_arg(&self, c: Fe) -> RatFunc {
        RatFunc::new(self.num.scale_arg(c), self.den.scale_arg(c)).expect("c nonzero keeps den nonzero")
    }

    /// `self(b(t))` for a non-constant polynomial `b`.
    pub fn compose_poly(&self, b: &Poly) -> Result<RatFunc> {
        RatFunc::new(self.num.compose(b), self.den.compose(b))
    }

    /// Value at `x`; errors at a pole.
    pub fn eval(&self, x: Fe) -> Result<Fe> {
        let d = self.den.eval(x);
        self.field().div(self.num.eval(x), d)
    }
}
