//! Finite fields `F_{p^l}` with a deterministic modulus.
//!
//! Elements are stored as their canonical index `sum d_i p^i`, where
//! `d_0, ..., d_{l-1}` are the base-`p` digits of the residue class modulo
//! the field's modulus (ascending degree). Prime fields use plain modular
//! arithmetic; proper extensions up to [`TABLE_LIMIT`] elements use
//! exp/log/Zech tables; anything larger falls back to digit arithmetic.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::{Error, Result};

/// Largest extension field that gets exp/log/Zech tables.
pub const TABLE_LIMIT: u64 = 1 << 22;

const ZECH_NONE: u32 = u32::MAX;

/// An element of some [`Field`], identified by its canonical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub(crate) u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Canonical index `sum d_i p^i`.
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Result of an m-th power residue test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Residue {
    pub is_residue: bool,
    pub root: Option<Fe>,
}

struct Tables {
    // exp has length 2(q-1) so that sums of two logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

enum Repr {
    Prime,
    Tables(Tables),
    Digits,
}

struct Inner {
    p: u64,
    l: u32,
    q: u64,
    modulus: Vec<u64>,
    pow_p: Vec<u64>,
    generator: u64,
    repr: Repr,
}

/// A finite field description (`FieldDesc`): characteristic, degree and
/// monic irreducible modulus. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.l == other.0.l && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.0.p, self.0.l, self.0.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.l == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}", self.0.q)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense F_p[t] helpers used only for the modulus search.
mod fp_poly {
    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] * inv % p;
            if c != 0 {
                let shift = top - dm;
                for (i, &mi) in m.iter().enumerate() {
                    r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
                }
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + p - y) % p;
        }
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    pub fn inv_mod(a: u64, p: u64) -> u64 {
        pow_mod(a, p - 2, p)
    }

    pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1u64 % p;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = ((r as u128 * a as u128) % p as u128) as u64;
            }
            a = ((a as u128 * a as u128) % p as u128) as u64;
            e >>= 1;
        }
        r
    }

    /// Ben-Or irreducibility test for a monic `f` of degree `l`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let l = f.len() - 1;
        if l == 1 {
            return true;
        }
        if f[0] == 0 {
            return false;
        }
        // h = t^{p^i} mod f
        let t = vec![0, 1];
        let mut h = rem(&t, f, p);
        for _ in 1..=l / 2 {
            // h <- h^p
            let mut acc = vec![1u64];
            let mut base = h.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(&acc, &base, f, p);
                }
                base = mulmod(&base, &base, f, p);
                e >>= 1;
            }
            h = acc;
            let g = gcd(f, &sub(&h, &t, p), p);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}

/// Smallest monic irreducible of degree `l` over `F_p`, ordering candidates
/// by the integer `sum c_i p^i` of their non-leading coefficients.
pub fn smallest_irreducible(p: u64, l: u32) -> Vec<u64> {
    let l = l as usize;
    let count = p.pow(l as u32);
    for code in 0..count {
        let mut f = Vec::with_capacity(l + 1);
        let mut c = code;
        for _ in 0..l {
            f.push(c % p);
            c /= p;
        }
        f.push(1);
        if fp_poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl Field {
    /// Builds `F_{p^l}` with the deterministic smallest irreducible modulus.
    pub fn new(p: u64, l: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if l == 0 {
            return Err(Error::ZeroDegree);
        }
        Self::check_size(p, l)?;
        let modulus = smallest_irreducible(p, l);
        Ok(Self::build(p, l, modulus))
    }

    /// Prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        Self::new(p, 1)
    }

    /// The field of order `q`, which must be a prime power.
    pub fn from_order(q: u64) -> Result<Field> {
        let factors = prime_factors(q);
        if factors.len() != 1 {
            return Err(Error::Precondition(format!("{q} is not a prime power")));
        }
        let p = factors[0];
        let mut l = 0u32;
        let mut r = q;
        while r > 1 {
            r /= p;
            l += 1;
        }
        Self::new(p, l)
    }

    /// Builds a field from an explicit modulus, verifying irreducibility.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        let l = (modulus.len() - 1) as u32;
        Self::check_size(p, l)?;
        if modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p) {
            return Err(Error::Malformed("modulus must be monic with digits below p".into()));
        }
        if !fp_poly::is_irreducible(&modulus, p) {
            return Err(Error::Malformed("modulus is reducible".into()));
        }
        Ok(Self::build(p, l, modulus))
    }

    fn check_size(p: u64, l: u32) -> Result<()> {
        match p.checked_pow(l) {
            Some(q) if q < (1u64 << 62) => Ok(()),
            _ => Err(Error::FieldTooLarge { p, l }),
        }
    }

    fn build(p: u64, l: u32, modulus: Vec<u64>) -> Field {
        let q = p.pow(l);
        let pow_p: Vec<u64> = (0..l).map(|i| p.pow(i)).collect();
        let mut inner = Inner {
            p,
            l,
            q,
            modulus,
            pow_p,
            generator: 0,
            repr: if l == 1 { Repr::Prime } else { Repr::Digits },
        };
        inner.generator = find_generator(&inner);
        if l > 1 && q <= TABLE_LIMIT {
            inner.repr = Repr::Tables(build_tables(&inner));
        }
        Field(Arc::new(inner))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn l(&self) -> u32 {
        self.0.l
    }

    /// Field order `q = p^l`.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Monic modulus, ascending coefficients over `F_p` (length `l + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        Fe(self.0.generator)
    }

    /// The class of `t` in `F_p[t]/(modulus)` (equal to `-c_0` when `l = 1`).
    pub fn gen_t(&self) -> Fe {
        if self.0.l == 1 {
            Fe((self.0.p - self.0.modulus[0]) % self.0.p)
        } else {
            Fe(self.0.p)
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.0.p as i64) as u64)
    }

    /// Element with the given canonical index.
    pub fn elem(&self, index: u64) -> Result<Fe> {
        if index < self.0.q {
            Ok(Fe(index))
        } else {
            Err(Error::NotAnElement(index))
        }
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<Fe> {
        if digits.len() != self.0.l as usize {
            return Err(Error::Malformed(format!(
                "expected {} digits, got {}",
                self.0.l,
                digits.len()
            )));
        }
        let mut v = 0u64;
        for (i, &d) in digits.iter().enumerate() {
            if d >= self.0.p {
                return Err(Error::Malformed(format!("digit {d} not below p = {}", self.0.p)));
            }
            v += d * self.0.pow_p[i];
        }
        Ok(Fe(v))
    }

    /// Base-`p` digits of `a`, ascending, always of length `l`.
    pub fn digits(&self, a: Fe) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.0.l as usize);
        let mut v = a.0;
        for _ in 0..self.0.l {
            out.push(v % self.0.p);
            v /= self.0.p;
        }
        out
    }

    /// Iterator over all elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(Fe)
    }

    /// Whether `a` lies in the prime subfield.
    pub fn in_prime_field(&self, a: Fe) -> bool {
        a.0 < self.0.p
    }

    pub fn is_one(&self, a: Fe) -> bool {
        a.0 == 1
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let inner = &*self.0;
        match &inner.repr {
            Repr::Prime => {
                let s = a.0 + b.0;
                Fe(if s >= inner.p { s - inner.p } else { s })
            }
            _ if inner.p == 2 => Fe(a.0 ^ b.0),
            Repr::Tables(t) => {
                if a.0 == 0 {
                    return b;
                }
                if b.0 == 0 {
                    return a;
                }
                let n = inner.q - 1;
                let la = t.log[a.0 as usize] as u64;
                let lb = t.log[b.0 as usize] as u64;
                let diff = if lb >= la { lb - la } else { lb + n - la };
                let z = t.zech[diff as usize];
                if z == ZECH_NONE {
                    Fe(0)
                } else {
                    Fe(t.exp[(la + z as u64) as usize] as u64)
                }
            }
            Repr::Digits => Fe(digit_add(inner, a.0, b.0, false)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        let inner = &*self.0;
        if a.0 == 0 || inner.p == 2 {
            return a;
        }
        match &inner.repr {
            Repr::Prime => Fe(inner.p - a.0),
            Repr::Tables(t) => {
                let half = (inner.q - 1) / 2;
                Fe(t.exp[(t.log[a.0 as usize] as u64 + half) as usize] as u64)
            }
            Repr::Digits => Fe(digit_add(inner, 0, a.0, true)),
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        if let Repr::Prime = self.0.repr {
            let p = self.0.p;
            return Fe(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + p - b.0 });
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        let inner = &*self.0;
        match &inner.repr {
            Repr::Prime => Fe(((a.0 as u128 * b.0 as u128) % inner.p as u128) as u64),
            Repr::Tables(t) => {
                let s = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                Fe(t.exp[s] as u64)
            }
            Repr::Digits => Fe(digit_mul(inner, a.0, b.0)),
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        Ok(match &inner.repr {
            Repr::Tables(t) => {
                let n = inner.q - 1;
                let la = t.log[a.0 as usize] as u64;
                Fe(t.exp[((n - la) % n) as usize] as u64)
            }
            _ => self.pow(a, inner.q - 2),
        })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any `e >= 0`; `0^0 = 1`.
    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe(1);
        }
        if a.0 == 0 {
            return Fe(0);
        }
        let inner = &*self.0;
        if let Repr::Tables(t) = &inner.repr {
            let n = (inner.q - 1) as u128;
            let l = (t.log[a.0 as usize] as u128 * (e as u128 % n)) % n;
            return Fe(t.exp[l as usize] as u64);
        }
        let mut base = a;
        let mut r = Fe(1);
        let mut e = e % (inner.q - 1);
        if e == 0 {
            return Fe(1);
        }
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    /// `a^e` for an arbitrary-precision exponent.
    pub fn pow_big(&self, a: Fe, e: &BigUint) -> Fe {
        if e.bits() == 0 {
            return Fe(1);
        }
        if a.0 == 0 {
            return Fe(0);
        }
        let n = BigUint::from(self.0.q - 1);
        let r = (e % &n).to_u64().expect("reduced exponent fits");
        // a^{q-1} = 1, but a^{k(q-1)} with k > 0 must still be 1, which pow(a, 0) gives.
        self.pow(a, r)
    }

    /// `a^{p^j}`.
    pub fn frobenius(&self, a: Fe, j: u32) -> Fe {
        let j = j % self.0.l;
        if j == 0 {
            return a;
        }
        self.pow(a, self.0.p.pow(j))
    }

    /// The unique `b` with `b^{p^j} = a`.
    pub fn frobenius_inv(&self, a: Fe, j: u32) -> Fe {
        let l = self.0.l;
        let j = j % l;
        self.frobenius(a, (l - j) % l)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: Fe) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut n = self.0.q - 1;
        for r in prime_factors(self.0.q - 1) {
            while n.is_multiple_of(r) && self.pow(a, n / r).0 == 1 {
                n /= r;
            }
        }
        Ok(n)
    }

    /// Discrete logarithm base [`Field::primitive_element`].
    pub fn log(&self, a: Fe) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Repr::Tables(t) = &self.0.repr {
            return Ok(t.log[a.0 as usize] as u64);
        }
        let g = self.primitive_element();
        let mut x = Fe(1);
        for i in 0..self.0.q - 1 {
            if x == a {
                return Ok(i);
            }
            x = self.mul(x, g);
        }
        unreachable!("generator reaches every nonzero element")
    }

    /// Absolute trace `F_q -> F_p`, returned as an element of the prime field.
    pub fn absolute_trace(&self, a: Fe) -> Fe {
        let mut acc = Fe(0);
        let mut x = a;
        for _ in 0..self.0.l {
            acc = self.add(acc, x);
            x = self.pow(x, self.0.p);
        }
        acc
    }

    /// Whether `a` is an m-th power, with one m-th root when it is.
    ///
    /// Square roots use the exponent `(q+1)/4` when `q = 3 mod 4`; other
    /// roots come from an exhaustive scan (bounded by `ISOTWIST_MAX_Q`) or
    /// from the discrete logarithm for larger fields.
    pub fn residue(&self, a: Fe, m: u64) -> Residue {
        if a.0 == 0 {
            return Residue { is_residue: true, root: Some(Fe(0)) };
        }
        let q = self.0.q;
        let g = num_integer::gcd(m, q - 1);
        if self.pow(a, (q - 1) / g).0 != 1 {
            return Residue { is_residue: false, root: None };
        }
        if m == 2 && q % 4 == 3 {
            let r = self.pow(a, (q + 1) / 4);
            return Residue { is_residue: true, root: Some(r) };
        }
        if q <= crate::limits::max_q() {
            let root = self.elements().find(|&x| self.pow(x, m) == a);
            return Residue { is_residue: true, root };
        }
        // Solve m * k = log(a) mod (q - 1).
        let la = self.log(a).expect("nonzero");
        let n = q - 1;
        let (mg, ng, lg) = (m / g, n / g, la / g);
        let inv = mod_inverse(mg % ng, ng);
        let k = ((lg as u128 * inv as u128) % ng as u128) as u64;
        Residue { is_residue: true, root: Some(self.pow(self.primitive_element(), k)) }
    }

    /// Square root, if any.
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        if self.0.p == 2 {
            return Some(self.frobenius_inv(a, 1));
        }
        self.residue(a, 2).root
    }

    pub fn is_square(&self, a: Fe) -> bool {
        if self.0.p == 2 || a.0 == 0 {
            return true;
        }
        self.pow(a, (self.0.q - 1) / 2).0 == 1
    }
}

fn mod_inverse(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quo = old_r / r;
        (old_r, r) = (r, old_r - quo * r);
        (old_s, s) = (s, old_s - quo * s);
    }
    old_s.rem_euclid(n as i128) as u64
}

fn digit_add(inner: &Inner, a: u64, b: u64, negate_b: bool) -> u64 {
    let p = inner.p;
    let (mut x, mut y) = (a, b);
    let mut out = 0u64;
    for i in 0..inner.l as usize {
        let dx = x % p;
        let dy = y % p;
        x /= p;
        y /= p;
        let d = if negate_b { (dx + p - dy) % p } else { (dx + dy) % p };
        out += d * inner.pow_p[i];
    }
    out
}

fn digit_mul(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.p;
    let l = inner.l as usize;
    let mut da = [0u64; 64];
    let mut db = [0u64; 64];
    let (mut x, mut y) = (a, b);
    for i in 0..l {
        da[i] = x % p;
        db[i] = y % p;
        x /= p;
        y /= p;
    }
    let mut prod = [0u128; 128];
    for i in 0..l {
        if da[i] == 0 {
            continue;
        }
        for j in 0..l {
            prod[i + j] += (da[i] * db[j]) as u128;
        }
    }
    let m = &inner.modulus;
    for k in (l..2 * l - 1).rev() {
        let c = (prod[k] % p as u128) as u64;
        prod[k] = 0;
        if c == 0 {
            continue;
        }
        // t^l = -sum_{i<l} m_i t^i
        for i in 0..l {
            prod[k - l + i] += ((p - m[i]) % p * c) as u128;
        }
    }
    let mut out = 0u64;
    for i in 0..l {
        out += ((prod[i] % p as u128) as u64) * inner.pow_p[i];
    }
    out
}

fn slow_mul(inner: &Inner, a: u64, b: u64) -> u64 {
    if inner.l == 1 {
        ((a as u128 * b as u128) % inner.p as u128) as u64
    } else {
        digit_mul(inner, a, b)
    }
}

fn slow_pow(inner: &Inner, a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a;
    while e > 0 {
        if e & 1 == 1 {
            r = slow_mul(inner, r, b);
        }
        b = slow_mul(inner, b, b);
        e >>= 1;
    }
    r
}

fn find_generator(inner: &Inner) -> u64 {
    let q = inner.q;
    if q == 2 {
        return 1;
    }
    let factors = prime_factors(q - 1);
    let is_gen = |g: u64| g != 0 && factors.iter().all(|&r| slow_pow(inner, g, (q - 1) / r) != 1);
    // The class of t is tried first: multiplication by it is cheap.
    let t_class = if inner.l == 1 { (inner.p - inner.modulus[0]) % inner.p } else { inner.p };
    if is_gen(t_class) {
        return t_class;
    }
    (2..q).find(|&g| is_gen(g)).expect("cyclic multiplicative group")
}

fn build_tables(inner: &Inner) -> Tables {
    let q = inner.q as usize;
    let n = q - 1;
    let mut exp = vec![0u32; 2 * n];
    let mut log = vec![0u32; q];
    let g = inner.generator;
    let mut x = 1u64;
    for i in 0..n {
        exp[i] = x as u32;
        exp[i + n] = x as u32;
        log[x as usize] = i as u32;
        x = slow_mul(inner, x, g);
    }
    let p = inner.p;
    let mut zech = vec![ZECH_NONE; n];
    for (d, z) in zech.iter_mut().enumerate() {
        let idx = exp[d] as u64;
        let d0 = idx % p;
        let plus_one = idx - d0 + (d0 + 1) % p;
        if plus_one != 0 {
            *z = log[plus_one as usize];
        }
    }
    Tables { exp, log, zech }
}

/// A field element bundled with its field, for checked arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Fe,
}

impl FieldElement {
    pub fn new(field: &Field, value: Fe) -> Result<Self> {
        field.elem(value.0)?;
        Ok(FieldElement { field: field.clone(), value })
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        FieldElement { field: field.clone(), value: field.from_int(n) }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Fe {
        self.value
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, value: Fe) -> Self {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: &BigUint) -> Self {
        self.wrap(self.field.pow_big(self.value, e))
    }

    pub fn residue(&self, m: u64) -> Residue {
        self.field.residue(self.value, m)
    }

    pub fn digits(&self) -> Vec<u64> {
        self.field.digits(self.value)
    }
}
