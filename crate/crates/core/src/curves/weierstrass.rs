use crate::algebra::{Fe, Field, Poly, RatFunc};
use crate::{Error, Result};

use super::{FPoint, Family, TwistCurve};

/// `X = ux * x`, `Y = uy * y` from the twist model into the Weierstrass one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub ux: RatFunc,
    pub uy: RatFunc,
}

impl Substitution {
    pub fn is_identity(&self) -> bool {
        let one = RatFunc::one(self.ux.field());
        self.ux == one && self.uy == one
    }

    /// Twist model to Weierstrass model.
    pub fn push(&self, p: &FPoint) -> FPoint {
        match p {
            FPoint::Infinity => FPoint::Infinity,
            FPoint::Affine { x, y } => FPoint::Affine { x: x.mul(&self.ux), y: y.mul(&self.uy) },
        }
    }

    /// Weierstrass model back to the twist model.
    pub fn pull(&self, p: &FPoint) -> FPoint {
        match p {
            FPoint::Infinity => FPoint::Infinity,
            FPoint::Affine { x, y } => FPoint::Affine {
                x: x.div(&self.ux).expect("nonzero substitution"),
                y: y.div(&self.uy).expect("nonzero substitution"),
            },
        }
    }
}

/// `Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6` over `F_q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GWModel {
    field: Field,
    a: [RatFunc; 5],
    sub: Substitution,
}

impl GWModel {
    pub fn new(field: &Field, a: [RatFunc; 5]) -> GWModel {
        let one = RatFunc::one(field);
        GWModel { field: field.clone(), a, sub: Substitution { ux: one.clone(), uy: one } }
    }

    pub(super) fn of(c: &TwistCurve) -> GWModel {
        let f = c.field();
        let z = RatFunc::zero(f);
        let one = RatFunc::one(f);
        let r = |p: &Poly| RatFunc::from(p.clone());
        let (a, sub) = match c.family() {
            Family::Quadratic { a, f: co } => {
                let a2 = a * a;
                let a3 = &a2 * a;
                (
                    [z.clone(), r(&a.scale(co[2])), z.clone(), r(&a2.scale(co[1])), r(&a3.scale(co[0]))],
                    Substitution { ux: r(a), uy: r(&a2) },
                )
            }
            Family::Cubic { a } => (
                [z.clone(), z.clone(), r(&-a), z.clone(), z.clone()],
                Substitution { ux: r(a), uy: r(a) },
            ),
            Family::Quartic { d } => (
                [z.clone(), z.clone(), z.clone(), r(&-d), z.clone()],
                Substitution { ux: one.clone(), uy: one.clone() },
            ),
            Family::Sextic { d, sign } => (
                [z.clone(), z.clone(), z.clone(), z.clone(), r(d)],
                Substitution { ux: RatFunc::constant(f, f.from_int(*sign as i64)), uy: one.clone() },
            ),
        };
        GWModel { field: f.clone(), a, sub }
    }

    /// Coefficients `[a1, a2, a3, a4, a6]`.
    pub fn a(&self) -> &[RatFunc; 5] {
        &self.a
    }

    pub fn sub(&self) -> &Substitution {
        &self.sub
    }

    fn c(&self, n: i64) -> RatFunc {
        RatFunc::constant(&self.field, self.field.from_int(n))
    }

    /// Discriminant from the usual `b2, b4, b6, b8`.
    pub fn discriminant(&self) -> RatFunc {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = a1.mul(a1).add(&a2.mul(&self.c(4)));
        let b4 = a1.mul(a3).add(&a4.mul(&self.c(2)));
        let b6 = a3.mul(a3).add(&a6.mul(&self.c(4)));
        let b8 = a1
            .mul(a1)
            .mul(a6)
            .add(&a2.mul(a6).mul(&self.c(4)))
            .sub(&a1.mul(a3).mul(a4))
            .add(&a2.mul(a3).mul(a3))
            .sub(&a4.mul(a4));
        let t1 = b2.mul(&b2).mul(&b8).neg();
        let t2 = b4.mul(&b4).mul(&b4).mul(&self.c(8));
        let t3 = b6.mul(&b6).mul(&self.c(27));
        let t4 = b2.mul(&b4).mul(&b6).mul(&self.c(9));
        t1.sub(&t2).sub(&t3).add(&t4)
    }

    pub fn contains(&self, p: &FPoint) -> bool {
        match p {
            FPoint::Infinity => true,
            FPoint::Affine { x, y } => {
                let [a1, a2, a3, a4, a6] = &self.a;
                let lhs = y.mul(y).add(&a1.mul(x).mul(y)).add(&a3.mul(y));
                let rhs = x.mul(x).mul(x).add(&a2.mul(x).mul(x)).add(&a4.mul(x)).add(a6);
                lhs == rhs
            }
        }
    }

    pub fn neg(&self, p: &FPoint) -> FPoint {
        match p {
            FPoint::Infinity => FPoint::Infinity,
            FPoint::Affine { x, y } => {
                let [a1, _, a3, _, _] = &self.a;
                FPoint::Affine { x: x.clone(), y: y.neg().sub(&a1.mul(x)).sub(a3) }
            }
        }
    }

    /// Chord-tangent addition with the full `a1..a6` formulas.
    pub fn add(&self, p: &FPoint, q: &FPoint) -> Result<FPoint> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::OffCurve);
        }
        let (x1, y1, x2, y2) = match (p, q) {
            (FPoint::Infinity, _) => return Ok(q.clone()),
            (_, FPoint::Infinity) => return Ok(p.clone()),
            (FPoint::Affine { x: x1, y: y1 }, FPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, a6] = &self.a;
        let (lambda, nu) = if x1 == x2 {
            let denom = y1.mul(&self.c(2)).add(&a1.mul(x1)).add(a3);
            if y1 != y2 || denom.is_zero() {
                return Ok(FPoint::Infinity);
            }
            let num_l = x1.mul(x1).mul(&self.c(3)).add(&a2.mul(x1).mul(&self.c(2))).add(a4).sub(&a1.mul(y1));
            let num_n = x1.mul(x1).mul(x1).neg().add(&a4.mul(x1)).add(&a6.mul(&self.c(2))).sub(&a3.mul(y1));
            (num_l.div(&denom)?, num_n.div(&denom)?)
        } else {
            let dx = x2.sub(x1);
            (y2.sub(y1).div(&dx)?, y1.mul(x2).sub(&y2.mul(x1)).div(&dx)?)
        };
        let x3 = lambda.mul(&lambda).add(&a1.mul(&lambda)).sub(a2).sub(x1).sub(x2);
        let y3 = lambda.add(a1).mul(&x3).neg().sub(&nu).sub(a3);
        Ok(FPoint::Affine { x: x3, y: y3 })
    }

    /// `n P` by double-and-add.
    pub fn mul(&self, n: i64, p: &FPoint) -> Result<FPoint> {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = FPoint::Infinity;
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &b)?;
            }
            k >>= 1;
            if k > 0 {
                b = self.add(&b, &b)?;
            }
        }
        Ok(acc)
    }
}

/// A constant curve `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over
/// `F_q`, used for supersingularity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantCurve {
    pub field: Field,
    pub a: [Fe; 5],
}

impl ConstantCurve {
    /// `y^2 = f(x)` for a cubic `f` (any leading coefficient is rejected
    /// unless monic).
    pub fn from_cubic(f: &Poly) -> Result<ConstantCurve> {
        if f.deg() != Some(3) || !f.is_monic() {
            return Err(Error::Precondition(format!("{f} is not a monic cubic")));
        }
        Ok(ConstantCurve { field: f.field().clone(), a: [Fe::ZERO, f.coeff(2), Fe::ZERO, f.coeff(1), f.coeff(0)] })
    }

    /// `y^2 - y = x^3`.
    pub fn artin_schreier(field: &Field) -> ConstantCurve {
        ConstantCurve { field: field.clone(), a: [Fe::ZERO, Fe::ZERO, field.from_int(-1), Fe::ZERO, Fe::ZERO] }
    }

    fn model(&self) -> GWModel {
        let f = &self.field;
        GWModel::new(f, self.a.map(|c| RatFunc::constant(f, c)))
    }

    pub fn is_singular(&self) -> bool {
        self.model().discriminant().is_zero()
    }

    /// `#E(F_q)` by enumerating `x`.
    pub fn count_points(&self) -> Result<u64> {
        let f = &self.field;
        crate::limits::check_scan(f.order())?;
        let [a1, a2, a3, a4, a6] = self.a;
        let mut n = 1u64;
        for x in f.elements() {
            let b = f.add(f.mul(a1, x), a3);
            let x2 = f.mul(x, x);
            let c = f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.add(f.mul(a4, x), a6));
            n += if f.p() == 2 {
                if b.is_zero() {
                    1
                } else {
                    // y = b z turns the equation into z^2 + z = c / b^2
                    let w = f.div(c, f.mul(b, b))?;
                    if f.absolute_trace(w).is_zero() {
                        2
                    } else {
                        0
                    }
                }
            } else {
                let disc = f.add(f.mul(b, b), f.mul(f.from_int(4), c));
                if disc.is_zero() {
                    1
                } else if f.is_square(disc) {
                    2
                } else {
                    0
                }
            };
        }
        Ok(n)
    }
}

/// Whether `q + 1 - #E(F_q)` is divisible by `p`.
pub fn is_supersingular(e: &ConstantCurve) -> Result<bool> {
    if e.is_singular() {
        return Err(Error::Precondition("singular cubic".into()));
    }
    let n = e.count_points()? as i128;
    let q = e.field.order() as i128;
    Ok((q + 1 - n).rem_euclid(e.field.p() as i128) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supersingular_examples() {
        let f3 = Field::prime(3).unwrap();
        let e = ConstantCurve::from_cubic(&Poly::from_terms(&f3, &[(3, 1), (1, -1)])).unwrap();
        assert_eq!(e.count_points().unwrap(), 4);
        assert!(is_supersingular(&e).unwrap());

        let f5 = Field::prime(5).unwrap();
        let e = ConstantCurve::from_cubic(&Poly::from_terms(&f5, &[(3, 1), (1, -1)])).unwrap();
        assert!(!is_supersingular(&e).unwrap());

        let f2 = Field::prime(2).unwrap();
        let e = ConstantCurve::artin_schreier(&f2);
        assert_eq!(e.count_points().unwrap(), 3);
        assert!(is_supersingular(&e).unwrap());

        let sing = ConstantCurve::from_cubic(&Poly::from_terms(&f5, &[(3, 1)])).unwrap();
        assert!(is_supersingular(&sing).is_err());
    }

    #[test]
    fn counts_match_brute_force() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = Field::from_order(q).unwrap();
            let e = ConstantCurve {
                field: f.clone(),
                a: [f.from_int(1), Fe::ZERO, f.from_int(1), Fe::ZERO, f.from_int(1)],
            };
            if e.is_singular() {
                continue;
            }
            let mut n = 1;
            for x in f.elements() {
                for y in f.elements() {
                    let l = f.add(f.add(f.mul(y, y), f.mul(x, y)), y);
                    let r = f.add(f.mul(f.mul(x, x), x), Fe::ONE);
                    if l == r {
                        n += 1;
                    }
                }
            }
            assert_eq!(e.count_points().unwrap(), n, "q={q}");
        }
    }
}
