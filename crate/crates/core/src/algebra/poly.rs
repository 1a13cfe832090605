//! Dense univariate polynomials over a finite field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::{Embedding, Fe, Field};
use crate::{Error, Result};

/// Degree of a polynomial; the zero polynomial has degree `NegInf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in `t`, coefficients ascending, never with trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    /// Terms in descending degree, coefficients as canonical indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = c.index();
            match (i, coef) {
                (0, _) => write!(f, "{coef}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{coef}*t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{coef}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Builds a polynomial, trimming trailing zeros.
    pub fn new(field: &Field, coeffs: Vec<Fe>) -> Poly {
        let mut p = Poly { field: field.clone(), coeffs };
        p.trim();
        p
    }

    /// Coefficients given as integers (reduced into the prime subfield).
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    /// Sparse constructor from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms(field: &Field, terms: &[(usize, i64)]) -> Poly {
        let n = terms.iter().map(|t| t.0 + 1).max().unwrap_or(0);
        let mut c = vec![Fe::ZERO; n];
        for &(e, v) in terms {
            c[e] = field.add(c[e], field.from_int(v));
        }
        Poly::new(field, c)
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Fe::ONE)
    }

    pub fn constant(field: &Field, c: Fe) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c t^n`.
    pub fn monomial(field: &Field, c: Fe, n: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero(field);
        }
        let mut v = vec![Fe::ZERO; n + 1];
        v[n] = c;
        Poly { field: field.clone(), coeffs: v }
    }

    /// The indeterminate `t`.
    pub fn t(field: &Field) -> Poly {
        Poly::monomial(field, Fe::ONE, 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as an option, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Fe::ONE
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Fe::ONE
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Whether the polynomial is `c t^n` for some nonzero `c`.
    pub fn as_monomial(&self) -> Option<(Fe, usize)> {
        let v = self.valuation()?;
        if v + 1 == self.coeffs.len() {
            Some((self.coeffs[v], v))
        } else {
            None
        }
    }

    fn check(&self, other: &Poly) {
        assert!(self.field == other.field, "polynomials over different fields");
    }

    pub fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn scale(&self, c: Fe) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![Fe::ZERO; k];
        v.extend_from_slice(&self.coeffs);
        Poly { field: self.field.clone(), coeffs: v }
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    fn add_impl(&self, other: &Poly, negate: bool) -> Poly {
        self.check(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff(i);
            let b = other.coeff(i);
            v.push(if negate { f.sub(a, b) } else { f.add(a, b) });
        }
        Poly::new(f, v)
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        self.check(other);
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        if f.l() == 1 {
            let p = f.p() as u128;
            let mut acc = vec![0u128; n];
            for (i, a) in self.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let a = a.index() as u128;
                for (j, b) in other.coeffs.iter().enumerate() {
                    acc[i + j] += a * b.index() as u128;
                }
                // keep headroom for large p
                if p > (1 << 30) {
                    for x in acc.iter_mut() {
                        *x %= p;
                    }
                }
            }
            return Poly::new(f, acc.into_iter().map(|x| Fe((x % p) as u64)).collect());
        }
        let mut v = vec![Fe::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = f.add(v[i + j], f.mul(a, b));
                }
            }
        }
        Poly::new(f, v)
    }

    /// Quotient and remainder; errors on division by zero.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(b)?;
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv = f.inv(b.leading())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![Fe::ZERO; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + db], inv);
            if c.is_zero() {
                continue;
            }
            q[k] = c;
            for (i, &bi) in b.coeffs.iter().enumerate() {
                if !bi.is_zero() {
                    r[k + i] = f.sub(r[k + i], f.mul(c, bi));
                }
            }
        }
        r.truncate(db);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divrem(b)?.1)
    }

    /// Exact division; errors if `b` does not divide `self`.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Precondition(format!("{b} does not divide {self}")))
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Value at a field element (Horner).
    pub fn eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        let mut acc = Fe::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// `self(b(t))`.
    pub fn compose(&self, b: &Poly) -> Poly {
        self.check(b);
        let f = &self.field;
        let mut acc = Poly::zero(f);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * b) + &Poly::constant(f, c);
        }
        acc
    }

    /// `self(c t)`.
    pub fn scale_arg(&self, c: Fe) -> Poly {
        let f = &self.field;
        let mut pw = Fe::ONE;
        let mut v = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            v.push(f.mul(a, pw));
            pw = f.mul(pw, c);
        }
        Poly::new(f, v)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int((i as u64 % f.p()) as i64)))
            .collect();
        Poly::new(f, v)
    }

    /// `self^{p^j}`: raises coefficients by Frobenius and spreads exponents.
    pub fn frobenius_power(&self, j: u32) -> Poly {
        let f = &self.field;
        if self.is_zero() || j == 0 {
            return self.clone();
        }
        let step = f.p().pow(j) as usize;
        let mut v = vec![Fe::ZERO; (self.coeffs.len() - 1) * step + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i * step] = f.frobenius(c, j);
        }
        Poly { field: f.clone(), coeffs: v }
    }

    /// The unique `b` with `b^{p^j} = self`, if it exists.
    pub fn frobenius_root(&self, j: u32) -> Option<Poly> {
        let f = &self.field;
        if j == 0 || self.is_zero() {
            return Some(self.clone());
        }
        let step = f.p().checked_pow(j)? as usize;
        let mut v = vec![Fe::ZERO; (self.coeffs.len() - 1) / step + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i % step != 0 {
                return None;
            }
            v[i / step] = f.frobenius_inv(c, j);
        }
        Some(Poly::new(f, v))
    }

    /// `self^e`, splitting `e` into base-`p` digits so that high powers of
    /// the characteristic cost only a Frobenius spread.
    pub fn pow(&self, e: u64) -> Poly {
        self.pow_big(&BigUint::from(e))
    }

    pub fn pow_big(&self, e: &BigUint) -> Poly {
        let f = &self.field;
        if e.is_zero() {
            return Poly::one(f);
        }
        if self.is_zero() {
            return Poly::zero(f);
        }
        if let Some((c, n)) = self.as_monomial() {
            let n_big = BigUint::from(n) * e;
            let n = n_big.to_usize().expect("degree fits in memory");
            return Poly::monomial(f, f.pow_big(c, e), n);
        }
        let p = BigUint::from(f.p());
        let mut result = Poly::one(f);
        let mut rest = e.clone();
        let mut j = 0u32;
        while !rest.is_zero() {
            let digit = (&rest % &p).to_u64().expect("digit below p");
            rest /= &p;
            if digit != 0 {
                let part = self.pow_small(digit).frobenius_power(j);
                result = &result * &part;
            }
            j += 1;
        }
        result
    }

    fn pow_small(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut r = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        r
    }

    /// Squarefree test: `gcd(a, a') = 1`.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// A square root in `F_q[t]`, if one exists.
    ///
    /// Odd characteristic: the top half of the coefficients is forced by
    /// matching `s^2` against `self` from the leading term down, then the
    /// whole square is checked. Characteristic 2: every odd coefficient must
    /// vanish and the root is the coefficientwise Frobenius inverse. The
    /// sign is normalized so the leading coefficient has the smaller index.
    pub fn sqrt(&self) -> Option<Poly> {
        let f = &self.field;
        if self.is_zero() {
            return Some(self.clone());
        }
        if f.p() == 2 {
            return self.frobenius_root(1);
        }
        let n = self.coeffs.len() - 1;
        if n % 2 == 1 {
            return None;
        }
        let m = n / 2;
        let lead = f.sqrt(self.leading())?;
        let lead = {
            let other = f.neg(lead);
            if other < lead {
                other
            } else {
                lead
            }
        };
        let inv2l = f.inv(f.add(lead, lead)).ok()?;
        // s[m - i] indexed by i
        let mut s = vec![Fe::ZERO; m + 1];
        s[0] = lead;
        for i in 1..=m {
            let mut cross = Fe::ZERO;
            for j in 1..i {
                cross = f.add(cross, f.mul(s[j], s[i - j]));
            }
            let target = self.coeff(n - i);
            s[i] = f.mul(f.sub(target, cross), inv2l);
        }
        s.reverse();
        let root = Poly::new(f, s);
        if &(&root * &root) == self {
            Some(root)
        } else {
            None
        }
    }

    /// All roots in the coefficient field with multiplicity, ascending by
    /// index. Exhaustive, so the field must fit under `ISOTWIST_MAX_Q`.
    pub fn roots(&self) -> Result<Vec<Fe>> {
        if self.is_zero() {
            return Err(Error::Precondition("roots of the zero polynomial".into()));
        }
        crate::limits::check_scan(self.field.order())?;
        let f = &self.field;
        let mut out = Vec::new();
        let mut cur = self.clone();
        for x in f.elements() {
            if cur.is_constant() {
                break;
            }
            while !cur.is_constant() && cur.eval(x).is_zero() {
                cur = cur.synthetic_div(x);
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Quotient by `t - x`, assuming `x` is a root.
    fn synthetic_div(&self, x: Fe) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len();
        let mut q = vec![Fe::ZERO; n - 1];
        let mut carry = Fe::ZERO;
        for i in (1..n).rev() {
            carry = f.add(f.mul(carry, x), self.coeffs[i]);
            q[i - 1] = carry;
        }
        Poly::new(f, q)
    }

    /// Maps coefficients along a field embedding.
    pub fn embed(&self, e: &Embedding) -> Result<Poly> {
        if e.source() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::new(e.target(), self.coeffs.iter().map(|&c| e.apply(c)).collect()))
    }

    /// Lexicographic comparison on `(degree, coefficients from the top)`.
    pub fn cmp_canonical(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_impl(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
