//! The ring `F_q[F]` of `F_q`-additive polynomials `sum a_i t^{q^i}`.
//!
//! Composition makes this a commutative ring isomorphic to `F_q[t]` via
//! `sum a_i t^i <-> sum a_i F^i`, where `F` is the `q`-power map.

use std::fmt;

use crate::algebra::{Embedding, Fe, Field, Poly};
use crate::{Error, Result};

/// `A(t) = sum a_i t^{q^i}` stored by its `F`-coefficients `a_0, ..., a_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct AdditivePoly {
    field: Field,
    fcoeffs: Vec<Fe>,
}

impl fmt::Debug for AdditivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdditivePoly{:?} over {}", self.fcoeffs, self.field)
    }
}

impl AdditivePoly {
    pub fn new(field: &Field, mut fcoeffs: Vec<Fe>) -> AdditivePoly {
        while fcoeffs.last().is_some_and(|c| c.is_zero()) {
            fcoeffs.pop();
        }
        AdditivePoly { field: field.clone(), fcoeffs }
    }

    /// `sum a_i t^i` maps to `sum a_i F^i`.
    pub fn from_poly(p: &Poly) -> AdditivePoly {
        AdditivePoly::new(p.field(), p.coeffs().to_vec())
    }

    /// Inverse of [`AdditivePoly::from_poly`].
    pub fn to_poly(&self) -> Poly {
        Poly::new(&self.field, self.fcoeffs.clone())
    }

    /// The identity element `F^0 = t`.
    pub fn identity(field: &Field) -> AdditivePoly {
        AdditivePoly::new(field, vec![Fe::ONE])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn fcoeffs(&self) -> &[Fe] {
        &self.fcoeffs
    }

    pub fn is_zero(&self) -> bool {
        self.fcoeffs.is_empty()
    }

    /// Degree in `t`, i.e. `q^n` for the top index `n`.
    pub fn t_degree(&self) -> Option<u128> {
        let n = self.fcoeffs.len().checked_sub(1)?;
        (self.field.order() as u128).checked_pow(n as u32)
    }

    /// Expands to the polynomial `sum a_i t^{q^i}` in `F_q[t]`.
    pub fn expand(&self) -> Result<Poly> {
        let f = &self.field;
        let Some(deg) = self.t_degree() else {
            return Ok(Poly::zero(f));
        };
        if deg > 1 << 28 {
            return Err(Error::TooLarge { size: deg.min(u64::MAX as u128) as u64, cap: 1 << 28 });
        }
        let q = f.order() as usize;
        let mut v = vec![Fe::ZERO; deg as usize + 1];
        let mut e = 1usize;
        for &a in &self.fcoeffs {
            v[e] = a;
            e = e.saturating_mul(q);
        }
        Ok(Poly::new(f, v))
    }

    fn same(&self, other: &AdditivePoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &AdditivePoly) -> Result<AdditivePoly> {
        self.same(other)?;
        let f = &self.field;
        let n = self.fcoeffs.len().max(other.fcoeffs.len());
        let get = |v: &[Fe], i: usize| v.get(i).copied().unwrap_or(Fe::ZERO);
        let v = (0..n).map(|i| f.add(get(&self.fcoeffs, i), get(&other.fcoeffs, i))).collect();
        Ok(AdditivePoly::new(f, v))
    }

    /// `self(other(t))`, via `c_m = sum_{i+j=m} a_i b_j^{q^i}`.
    pub fn compose(&self, other: &AdditivePoly) -> Result<AdditivePoly> {
        self.same(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(AdditivePoly::new(f, Vec::new()));
        }
        let l = f.l();
        let mut c = vec![Fe::ZERO; self.fcoeffs.len() + other.fcoeffs.len() - 1];
        for (i, &a) in self.fcoeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.fcoeffs.iter().enumerate() {
                // b^{q^i}, which is b itself since b lies in F_q
                let bt = f.frobenius(b, l.wrapping_mul(i as u32));
                c[i + j] = f.add(c[i + j], f.mul(a, bt));
            }
        }
        Ok(AdditivePoly::new(f, c))
    }

    /// Evaluates at `x` in an extension field reached by `emb`.
    pub fn eval_in(&self, emb: &Embedding, x: Fe) -> Result<Fe> {
        if emb.source() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let big = emb.target();
        let l = self.field.l();
        let mut acc = Fe::ZERO;
        let mut xi = x;
        for &a in &self.fcoeffs {
            acc = big.add(acc, big.mul(emb.apply(a), xi));
            xi = big.frobenius(xi, l);
        }
        Ok(acc)
    }
}

/// `T^n_k = sum_{i < n/k} t^{q^{k i}}`, the trace from `F_{q^n}` to `F_{q^k}`.
pub fn trace_poly(field: &Field, n: u32, k: u32) -> Result<AdditivePoly> {
    if k == 0 || n == 0 || !n.is_multiple_of(k) {
        return Err(Error::Precondition(format!("k = {k} must divide n = {n}")));
    }
    let mut v = vec![Fe::ZERO; n as usize - k as usize + 1];
    for i in 0..(n / k) as usize {
        v[i * k as usize] = Fe::ONE;
    }
    Ok(AdditivePoly::new(field, v))
}

/// `B = B(F)` with `A_0 = (t^k - 1) B` in `F_q[t]`, so that the expanded
/// `A_0(F)(t) = B(t)^{q^k} - B(t)`.
pub fn divisor_witness(a0: &Poly, k: u32) -> Result<AdditivePoly> {
    let f = a0.field();
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let tk1 = Poly::from_terms(f, &[(k as usize, 1), (0, -1)]);
    let (quo, rem) = a0.divrem(&tk1)?;
    if !rem.is_zero() || a0.is_zero() {
        return Err(Error::Precondition(format!("t^{k} - 1 does not divide {a0}")));
    }
    Ok(AdditivePoly::from_poly(&quo))
}

/// Checks `expand(A_0(F)) = B^{q^k} - B` coefficient by coefficient.
pub fn witness_identity_holds(a0: &Poly, b: &AdditivePoly, k: u32) -> Result<bool> {
    let lhs = AdditivePoly::from_poly(a0).expand()?;
    let be = b.expand()?;
    let rhs = &be.frobenius_power(b.field().l() * k) - &be;
    Ok(lhs == rhs)
}
