//! Zeta functions of superelliptic curves `s^m = A(t)` and the class-group
//! divisibility witnesses they give.
//!
//! With `gcd(m, deg A) = 1` the curve has a single point at infinity, so
//! `Cl(O_K)` is `J_C(F_q)` and its order is `L(1)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{Embedding, Fe, Field, Poly, TABLE_LIMIT};
use crate::constructions::odd_divisors;
use crate::curves::{is_supersingular, ConstantCurve};
use crate::{json as js, Error, Result};

fn check_ramification(m: u64, a: &Poly) -> Result<usize> {
    let d = a.deg().filter(|&d| d > 0).ok_or_else(|| Error::Precondition("A must be non-constant".into()))?;
    let q = a.field().order();
    if m < 2 || m.gcd(&(d as u64)) != 1 || m.gcd(&q) != 1 {
        return Err(Error::Precondition(format!("need m >= 2, gcd(m, deg A) = 1 and gcd(m, q) = 1 (m = {m}, deg A = {d}, q = {q})")));
    }
    Ok(d)
}

fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Inconsistent(e.to_string()))
}

/// Points of the smooth model of `s^m = A(t)` over `F_{q^i}`, the one
/// point at infinity included.
pub fn curve_count(m: u64, a: &Poly, i: u32, jobs: usize) -> Result<u64> {
    check_ramification(m, a)?;
    let base = a.field();
    let l = base.l() * i;
    let order = base.p().checked_pow(l).filter(|&q| q <= TABLE_LIMIT);
    if order.is_none() {
        return Err(Error::TooLarge { size: base.p().saturating_pow(l), cap: TABLE_LIMIT });
    }
    let ext = Field::new(base.p(), l)?;
    let a = a.embed(&Embedding::new(base, &ext)?)?;
    let terms: Vec<(u64, Fe)> =
        a.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, &c)| (k as u64, c)).collect();
    let q = ext.order();
    let g = m.gcd(&(q - 1));
    // g-th powers among nonzero elements, by walking powers of the generator
    let mut residue = vec![false; q as usize];
    let step = ext.pow(ext.primitive_element(), g);
    let mut x = Fe::ONE;
    for _ in 0..(q - 1) / g {
        residue[x.index() as usize] = true;
        x = ext.mul(x, step);
    }
    const CHUNK: u64 = 1 << 14;
    let affine: u64 = thread_pool(jobs)?.install(|| {
        (0..q.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| {
                let mut n = 0u64;
                for idx in c * CHUNK..((c + 1) * CHUNK).min(q) {
                    let t = Fe(idx);
                    let v = terms.iter().fold(Fe::ZERO, |acc, &(k, c)| ext.add(acc, ext.mul(c, ext.pow(t, k))));
                    n += if v.is_zero() {
                        1
                    } else if residue[v.index() as usize] {
                        g
                    } else {
                        0
                    };
                }
                n
            })
            .sum()
    });
    Ok(affine + 1)
}

/// Point counts, genus and L-polynomial of `s^m = A(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaData {
    pub m: u64,
    pub a: Poly,
    pub q: u64,
    pub genus: usize,
    /// `N_1, ..., N_g`.
    pub counts: Vec<u64>,
    /// `L(T) = sum b_i T^i`, degree `2g`.
    pub l_coeffs: Vec<BigInt>,
}

impl ZetaData {
    /// `L(1) = #J_C(F_q)`.
    pub fn jacobian_order(&self) -> BigInt {
        self.l_coeffs.iter().sum()
    }

    pub fn functional_equation_holds(&self) -> bool {
        let g = self.genus;
        let q = BigInt::from(self.q);
        self.l_coeffs.len() == 2 * g + 1
            && self.l_coeffs[0].is_one()
            && (0..=g).all(|i| self.l_coeffs[2 * g - i] == q.pow((g - i) as u32) * &self.l_coeffs[i])
    }

    /// `(√q - 1)^{2g} <= L(1) <= (√q + 1)^{2g}`, decided exactly.
    pub fn in_weil_interval(&self) -> bool {
        let n = self.jacobian_order();
        let (lo, hi) = weil_bounds(self.q, self.genus);
        cmp_surd(&(&n - &lo.0), &lo.1, self.q) != Ordering::Less
            && cmp_surd(&(&hi.0 - &n), &(-&hi.1), self.q) != Ordering::Less
    }

    /// `N_i` recomputed from `L` by Newton's identities.
    pub fn predicted_count(&self, i: usize) -> BigInt {
        let b = |k: usize| self.l_coeffs.get(k).cloned().unwrap_or_default();
        let mut s: Vec<BigInt> = vec![BigInt::zero()];
        for k in 1..=i {
            // k b_k = -sum_{j=1}^{k} s_j b_{k-j}
            let mut acc = -BigInt::from(k as u64) * b(k);
            for j in 1..k {
                acc -= &s[j] * b(k - j);
            }
            s.push(acc);
        }
        BigInt::from(self.q).pow(i as u32) + 1 - &s[i]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "A": js::poly(&self.a),
            "field": js::field(self.a.field()),
            "q": self.q,
            "genus": self.genus,
            "counts": self.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "L": self.l_coeffs.iter().map(js::bigint).collect::<Vec<_>>(),
            "jacobian_order": js::bigint(&self.jacobian_order()),
            "functional_equation": self.functional_equation_holds(),
            "weil_interval": self.in_weil_interval(),
        })
    }
}

// (q + 1 ± 2√q)^g as (x, y) meaning x + y√q
fn weil_bounds(q: u64, g: usize) -> ((BigInt, BigInt), (BigInt, BigInt)) {
    let pow = |sign: i64| {
        let (mut x, mut y) = (BigInt::one(), BigInt::zero());
        let (a, b) = (BigInt::from(q + 1), BigInt::from(2 * sign));
        let qb = BigInt::from(q);
        for _ in 0..g {
            // (x + y√q)(a + b√q)
            let nx = &x * &a + &y * &b * &qb;
            let ny = &x * &b + &y * &a;
            x = nx;
            y = ny;
        }
        (x, y)
    };
    (pow(-1), pow(1))
}

/// Compares `u` with `v √q`.
fn cmp_surd(u: &BigInt, v: &BigInt, q: u64) -> Ordering {
    match (u.sign() != num_bigint::Sign::Minus, v.sign() != num_bigint::Sign::Minus) {
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (true, true) => (u * u).cmp(&(v * v * BigInt::from(q))),
        (false, false) => (v * v * BigInt::from(q)).cmp(&(u * u)),
    }
}

/// Counts over `F_q, ..., F_{q^g}` and the L-polynomial assembled from them.
pub fn l_polynomial(m: u64, a: &Poly, jobs: usize) -> Result<ZetaData> {
    let d = check_ramification(m, a)?;
    let genus = ((m - 1) as usize * (d - 1)) / 2;
    let q = a.field().order();
    let counts = (1..=genus as u32).map(|i| curve_count(m, a, i, jobs)).collect::<Result<Vec<_>>>()?;
    // power sums of the reciprocal roots
    let s: Vec<BigInt> = std::iter::once(BigInt::zero())
        .chain(counts.iter().enumerate().map(|(i, &n)| BigInt::from(q).pow(i as u32 + 1) + 1 - BigInt::from(n)))
        .collect();
    let mut b = vec![BigInt::one()];
    for k in 1..=genus {
        let mut acc = BigInt::zero();
        for j in 1..=k {
            acc -= &s[j] * &b[k - j];
        }
        let (quot, rem) = acc.div_rem(&BigInt::from(k as u64));
        if !rem.is_zero() {
            return Err(Error::Inconsistent(format!("Newton identity at k = {k} is not integral")));
        }
        b.push(quot);
    }
    let qb = BigInt::from(q);
    for i in (0..genus).rev() {
        let v = qb.pow((genus - i) as u32) * &b[i];
        b.push(v);
    }
    let z = ZetaData { m, a: a.clone(), q, genus, counts, l_coeffs: b };
    if !z.in_weil_interval() {
        return Err(Error::Inconsistent(format!("L(1) = {} lies outside the Weil interval", z.jacobian_order())));
    }
    let binom_ok = z.l_coeffs.iter().enumerate().all(|(i, c)| {
        // |b_i| <= C(2g, i) q^{i/2}, squared to stay integral
        let bound = binomial(2 * genus, i);
        c.abs().pow(2) <= &bound * &bound * BigInt::from(q).pow(i as u32)
    });
    if !binom_ok {
        return Err(Error::Inconsistent("an L-coefficient exceeds its Weil bound".into()));
    }
    Ok(z)
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFamily {
    /// `s^2 = t^{q^n} - t`, `q = 3 mod 4`.
    Square,
    /// `s^3 = t^{q^n} - t`, `q = 2 mod 3`.
    Cube,
}

impl ClassFamily {
    pub fn m(self) -> u64 {
        match self {
            ClassFamily::Square => 2,
            ClassFamily::Cube => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassFamily::Square => "s2",
            ClassFamily::Cube => "s3",
        }
    }

    pub fn parse(s: &str) -> Option<ClassFamily> {
        match s {
            "s2" | "2" => Some(ClassFamily::Square),
            "s3" | "3" => Some(ClassFamily::Cube),
            _ => None,
        }
    }
}

/// Divisibility of `#J_C(F_q)` by one `m | q + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDivisibility {
    pub m: u64,
    /// `m^τ | L(1)`.
    pub order_divides: bool,
    /// Whether `m` divides the exponent of `E(F_q)`; when it does not, the
    /// `(Z/m)^τ` subgroup does not follow from the product decomposition.
    pub within_exponent: bool,
}

#[derive(Clone, Debug)]
pub struct ClassRankReport {
    pub q: u64,
    pub n: u32,
    pub family: ClassFamily,
    pub tau: usize,
    pub e_order: u64,
    pub e_exponent: u64,
    pub zeta: ZetaData,
    pub required_divisor: BigInt,
    pub verdict: bool,
    pub per_m: Vec<MDivisibility>,
}

impl ClassRankReport {
    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q,
            "n": self.n,
            "m": self.family.m(),
            "family": self.family.name(),
            "tau_odd": self.tau,
            "E_order": self.e_order,
            "E_exponent": self.e_exponent,
            "genus": self.zeta.genus,
            "jacobian_order": js::bigint(&self.zeta.jacobian_order()),
            "required_divisor": js::bigint(&self.required_divisor),
            "verdict": self.verdict,
            "per_m": self.per_m.iter().map(|d| json!({
                "m": d.m,
                "order_divides": d.order_divides,
                "within_exponent": d.within_exponent,
            })).collect::<Vec<_>>(),
            "zeta": self.zeta.to_json(),
        })
    }
}

/// Checks `|E(F_q)|^{τ_odd(n)} | #J_C(F_q)` for `C: s^m = t^{q^n} - t`.
pub fn class_rank_witness(field: &Field, n: u32, family: ClassFamily, jobs: usize) -> Result<ClassRankReport> {
    let q = field.order();
    let e = match family {
        ClassFamily::Square if q % 4 == 3 => ConstantCurve::from_cubic(&Poly::from_terms(field, &[(3, 1), (1, -1)]))?,
        ClassFamily::Cube if q % 3 == 2 => ConstantCurve::artin_schreier(field),
        _ => {
            return Err(Error::Precondition(format!(
                "family {} needs q = {} (got q = {q})",
                family.name(),
                if family == ClassFamily::Square { "3 mod 4" } else { "2 mod 3" }
            )))
        }
    };
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if !is_supersingular(&e)? {
        return Err(Error::Inconsistent("base curve is not supersingular".into()));
    }
    let e_order = e.count_points()?;
    // trace zero: E(F_q) is Z/(q+1) unless all 2-torsion is rational, and
    // then Z/2 x Z/((q+1)/2); only x^3 - x has rational 2-torsion here
    let e_exponent = match family {
        ClassFamily::Square => q.div_ceil(2),
        ClassFamily::Cube => q + 1,
    };
    let qn = q
        .checked_pow(n)
        .filter(|&v| v < 1 << 20)
        .ok_or_else(|| Error::Precondition(format!("q^n = {q}^{n} is too large to count")))?;
    let a = Poly::from_terms(field, &[(qn as usize, 1), (1, -1)]);
    let zeta = l_polynomial(family.m(), &a, jobs)?;
    let tau = odd_divisors(n).len();
    let order = zeta.jacobian_order();
    let required_divisor = BigInt::from(e_order).pow(tau as u32);
    let verdict = order.is_multiple_of(&required_divisor);
    let per_m = (1..=q + 1)
        .filter(|m| (q + 1).is_multiple_of(*m))
        .map(|m| MDivisibility {
            m,
            order_divides: order.is_multiple_of(&BigInt::from(m).pow(tau as u32)),
            within_exponent: e_exponent % m == 0,
        })
        .collect();
    Ok(ClassRankReport { q, n, family, tau, e_order, e_exponent, zeta, required_divisor, verdict, per_m })
}
