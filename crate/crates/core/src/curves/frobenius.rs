//! The descended Frobenius `F^e` on each twist family.
//!
//! On the constant model `(x, y) -> (x^Q, y^Q)` with `Q = q^e`. After
//! twisting by `T` (the family's `A` or `D`) it reads
//! `(T^{ex (Q-1)} x^Q, T^{ey (Q-1)} y^Q)` with rational exponents:
//!
//! | family    | ex    | ey    |
//! |-----------|-------|-------|
//! | quadratic | 0     | 1/2   |
//! | cubic     | 1/3   | 0     |
//! | quartic   | -1/2  | -3/4  |
//! | sextic    | -1/3  | -1/2  |
//!
//! `e` is the least exponent making every `ex (Q-1)`, `ey (Q-1)` integral.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::algebra::RatFunc;
use crate::{Error, Result};

use super::{FPoint, Family, TwistCurve};

/// Twist exponents as `(numerator, denominator)` pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistExponents {
    pub x: (i64, u64),
    pub y: (i64, u64),
}

impl TwistExponents {
    pub fn of(family: &Family) -> TwistExponents {
        match family {
            Family::Quadratic { .. } => TwistExponents { x: (0, 1), y: (1, 2) },
            Family::Cubic { .. } => TwistExponents { x: (1, 3), y: (0, 1) },
            Family::Quartic { .. } => TwistExponents { x: (-1, 2), y: (-3, 4) },
            Family::Sextic { .. } => TwistExponents { x: (-1, 3), y: (-1, 2) },
        }
    }

    fn modulus(&self) -> u64 {
        self.x.1.lcm(&self.y.1)
    }
}

/// Least `e >= 1` with `lcm(denominators) | q^e - 1`.
pub fn descent_exponent(c: &TwistCurve) -> Result<u32> {
    let m = TwistExponents::of(c.family()).modulus();
    let q = c.field().order();
    if m.gcd(&q) != 1 {
        return Err(Error::Precondition(format!(
            "{} family over F_{q}: q shares a factor with {m}, so no Frobenius descends",
            c.family().name()
        )));
    }
    let mut e = 1u32;
    let mut r = q % m;
    while r != 1 % m {
        r = r * (q % m) % m;
        e += 1;
    }
    Ok(e)
}

fn twist_power(c: &TwistCurve, (num, den): (i64, u64), qe_minus_1: &BigUint, invert: bool) -> Result<RatFunc> {
    let e = BigInt::from(num) * BigInt::from(qe_minus_1.clone()) / BigInt::from(den);
    let e = if invert { -e } else { e };
    let t = RatFunc::from(c.twist_poly().clone());
    let base = if e.is_negative() { t.inv()? } else { t };
    Ok(base.pow_big(&e.abs().to_biguint().expect("non-negative")))
}

impl TwistCurve {
    /// `Q = q^e` for the descent exponent `e`.
    pub fn frobenius_degree(&self) -> Result<(u32, BigUint)> {
        let e = descent_exponent(self)?;
        Ok((e, BigUint::from(self.field().order()).pow(e)))
    }

    /// Image of `p` under the descended Frobenius.
    pub fn frobenius_step(&self, p: &FPoint) -> Result<FPoint> {
        let (e, qe) = self.frobenius_degree()?;
        let (x, y) = match p {
            FPoint::Infinity => return Ok(FPoint::Infinity),
            FPoint::Affine { x, y } => (x, y),
        };
        let ex = TwistExponents::of(self.family());
        let j = self.field().l() * e;
        let qm1 = &qe - BigUint::one();
        let nx = twist_power(self, ex.x, &qm1, false)?.mul(&x.frobenius_power(j));
        let ny = twist_power(self, ex.y, &qm1, false)?.mul(&y.frobenius_power(j));
        Ok(FPoint::Affine { x: nx, y: ny })
    }

    /// The unique point mapping to `p` under [`TwistCurve::frobenius_step`],
    /// if one exists.
    pub fn frobenius_preimage(&self, p: &FPoint) -> Result<Option<FPoint>> {
        let (e, qe) = self.frobenius_degree()?;
        let (x, y) = match p {
            FPoint::Infinity => return Ok(Some(FPoint::Infinity)),
            FPoint::Affine { x, y } => (x, y),
        };
        let ex = TwistExponents::of(self.family());
        let j = self.field().l() * e;
        let qm1 = &qe - BigUint::one();
        let ux = x.mul(&twist_power(self, ex.x, &qm1, true)?);
        let uy = y.mul(&twist_power(self, ex.y, &qm1, true)?);
        let (Some(x0), Some(y0)) = (ux.frobenius_root(j), uy.frobenius_root(j)) else {
            return Ok(None);
        };
        let pre = FPoint::Affine { x: x0, y: y0 };
        Ok(self.contains(&pre).then_some(pre))
    }

    /// Fast sufficient test for separability: the untwisted coordinates of
    /// a Frobenius image are `Q`-th powers, so a nonzero derivative of
    /// either one rules out a preimage.
    pub fn derivative_criterion(&self, p: &FPoint) -> Result<bool> {
        let (_, qe) = self.frobenius_degree()?;
        let (x, y) = match p {
            FPoint::Infinity => return Ok(false),
            FPoint::Affine { x, y } => (x, y),
        };
        let ex = TwistExponents::of(self.family());
        let qm1 = &qe - BigUint::one();
        let ux = x.mul(&twist_power(self, ex.x, &qm1, true)?);
        let uy = y.mul(&twist_power(self, ex.y, &qm1, true)?);
        Ok(!ux.derivative().is_zero() || !uy.derivative().is_zero())
    }

    /// Separability of a non-constant point.
    ///
    /// Quadratic twists use `x' != 0`; the other families use the preimage
    /// test, which the derivative criterion only approximates from one side.
    pub fn is_separable(&self, p: &FPoint) -> Result<bool> {
        if p.is_constant() {
            return Err(Error::Precondition("separability is defined for non-constant points".into()));
        }
        if !self.contains(p) {
            return Err(Error::OffCurve);
        }
        match self.family() {
            Family::Quadratic { .. } => Ok(!p.x().expect("affine").derivative().is_zero()),
            _ => Ok(self.frobenius_preimage(p)?.is_none()),
        }
    }

    /// Walks preimages back to the orbit root: returns `(root, i)` with
    /// `frobenius_step^i(root) = p` and `root` admitting no preimage.
    pub fn orbit_root(&self, p: &FPoint) -> Result<(FPoint, u32)> {
        if p.is_constant() {
            return Err(Error::Precondition("orbit roots are defined for non-constant points".into()));
        }
        if !self.contains(p) {
            return Err(Error::OffCurve);
        }
        let mut cur = p.clone();
        for i in 0..256 {
            match self.frobenius_preimage(&cur)? {
                Some(prev) if !prev.is_constant() => cur = prev,
                _ => return Ok((cur, i)),
            }
        }
        Err(Error::Inconsistent("preimage chain did not terminate".into()))
    }

    /// Whether two non-constant points share an orbit root.
    pub fn same_orbit(&self, p: &FPoint, q: &FPoint) -> Result<bool> {
        Ok(self.orbit_root(p)?.0 == self.orbit_root(q)?.0)
    }
}
