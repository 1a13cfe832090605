//! Brute-force oracle for `∞`-integral points on `A(t) y^2 = f(x)`.
//!
//! `F` is enumerated directly; `G` is recovered as the square root of
//! `f(F) / A`. Only degrees allowed by `d/3 <= deg F < d - 1` with
//! `deg F = d mod 2` are visited.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{Fe, Field, Poly};
use crate::curves::{FPoint, TwistCurve};
use crate::limits::MAX_SEARCH_CANDIDATES;
use crate::{json as js, Error, Result};

/// An oracle hit `A G^2 = f(F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub f: Poly,
    pub g: Poly,
}

impl SearchHit {
    pub fn point(&self) -> FPoint {
        FPoint::affine(self.f.clone(), self.g.clone())
    }

    fn cmp(&self, other: &SearchHit) -> Ordering {
        self.f.cmp_canonical(&other.f).then_with(|| self.g.cmp_canonical(&other.g))
    }
}

/// Degrees of `F` the oracle will visit for `deg A = d`, clipped to
/// `[min, max]`.
pub fn degree_window(d: usize, min: usize, max: usize) -> Vec<usize> {
    let lo = d.div_ceil(3).max(min);
    let hi = d.saturating_sub(2).min(max);
    (lo..=hi).filter(|k| k % 2 == d % 2).collect()
}

/// Number of candidates `F` of exact degree `k` over `F_q`.
fn candidates(q: u64, k: usize) -> Option<u64> {
    q.checked_pow(k as u32)?.checked_mul(q - 1)
}

fn check_hypotheses(a: &Poly, f: &Poly) -> Result<usize> {
    a.same_field(f)?;
    let d = a.deg().unwrap_or(0);
    if a.is_zero() || d.is_multiple_of(2) {
        return Err(Error::Precondition(format!("A = {a} must have odd degree")));
    }
    if !a.is_squarefree() {
        return Err(Error::Precondition(format!("A = {a} is not squarefree")));
    }
    Ok(d)
}

/// All `(F, G)` with `A G^2 = f(F)`, `F' != 0` and `deg F` in the
/// window, sorted by `(F, G)`.
pub fn search_integral_points(a: &Poly, f: &Poly, min_deg: usize, max_deg: usize, jobs: usize) -> Result<Vec<SearchHit>> {
    let d = check_hypotheses(a, f)?;
    // validates f as well
    TwistCurve::quadratic(a.clone(), f)?;
    let field = a.field().clone();
    let q = field.order();
    let degrees = degree_window(d, min_deg, max_deg);
    let mut total = 0u64;
    for &k in &degrees {
        let n = candidates(q, k).ok_or(Error::TooLarge { size: u64::MAX, cap: MAX_SEARCH_CANDIDATES })?;
        total = total.saturating_add(n);
    }
    if total > MAX_SEARCH_CANDIDATES {
        return Err(Error::TooLarge { size: total, cap: MAX_SEARCH_CANDIDATES });
    }
    let mut roots = a.roots()?;
    roots.dedup();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Inconsistent(e.to_string()))?;
    let mut hits: Vec<SearchHit> = pool.install(|| {
        degrees
            .iter()
            .flat_map(|&k| {
                let n = candidates(q, k).expect("checked above");
                const CHUNK: u64 = 1 << 12;
                (0..n.div_ceil(CHUNK)).map(move |c| (k, c * CHUNK, ((c + 1) * CHUNK).min(n)))
            })
            .collect::<Vec<_>>()
            .into_par_iter()
            .flat_map_iter(|(k, lo, hi)| scan(&field, a, f, &roots, k, lo, hi))
            .collect()
    });
    hits.sort_by(SearchHit::cmp);
    Ok(hits)
}

// candidates [lo, hi) of exact degree k: index = lead-1 + (q-1) * rest
fn scan(field: &Field, a: &Poly, f: &Poly, roots: &[Fe], k: usize, lo: u64, hi: u64) -> Vec<SearchHit> {
    let q = field.order();
    let p = field.p() as usize;
    let mut out = Vec::new();
    let mut c = vec![Fe::ZERO; k + 1];
    for idx in lo..hi {
        c[k] = Fe(1 + idx % (q - 1));
        let mut rest = idx / (q - 1);
        for slot in c.iter_mut().take(k) {
            *slot = Fe(rest % q);
            rest /= q;
        }
        if !(1..=k).any(|i| i % p != 0 && !c[i].is_zero()) {
            continue;
        }
        let value_ok = roots.iter().all(|&r| {
            let mut v = Fe::ZERO;
            for &ci in c.iter().rev() {
                v = field.add(field.mul(v, r), ci);
            }
            f.eval(v).is_zero()
        });
        if !value_ok {
            continue;
        }
        let big_f = Poly::new(field, c.clone());
        let Ok((quot, rem)) = f.compose(&big_f).divrem(a) else {
            continue;
        };
        if !rem.is_zero() {
            continue;
        }
        if let Some(g) = quot.sqrt() {
            let neg = -&g;
            out.push(SearchHit { f: big_f.clone(), g: g.clone() });
            if neg != g {
                out.push(SearchHit { f: big_f, g: neg });
            }
        }
    }
    out
}

/// A hit as a JSON record with its membership certificate.
pub fn hit_json(curve: &TwistCurve, hit: &SearchHit) -> Value {
    let cert = curve.certificate(&hit.point());
    json!({
        "F": js::poly(&hit.f),
        "G": js::poly(&hit.g),
        "certificate": {"lhs": js::poly(&cert.lhs), "rhs": js::poly(&cert.rhs), "holds": cert.holds()},
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        assert_eq!(degree_window(7, 0, usize::MAX), vec![3, 5]);
        assert_eq!(degree_window(3, 0, usize::MAX), vec![1]);
        assert_eq!(degree_window(5, 0, 2), Vec::<usize>::new());
        assert_eq!(degree_window(27, 9, 13), vec![9, 11, 13]);
    }

    #[test]
    fn small_search_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let a = Poly::from_terms(&f3, &[(3, 1), (1, -1)]);
        let f = a.clone();
        let hits = search_integral_points(&a, &f, 0, 10, 1).unwrap();
        // F = t + c, G = +-1
        assert_eq!(hits.len(), 6);
        let c = TwistCurve::quadratic(a, &f).unwrap();
        for h in &hits {
            assert_eq!(h.f.deg(), Some(1));
            assert!(c.contains(&h.point()));
        }
    }

    #[test]
    fn rejects_bad_twists() {
        let f3 = Field::prime(3).unwrap();
        let f = Poly::from_terms(&f3, &[(3, 1), (1, -1)]);
        assert!(search_integral_points(&Poly::from_terms(&f3, &[(2, 1), (0, -1)]), &f, 0, 9, 1).is_err());
        assert!(search_integral_points(&Poly::from_terms(&f3, &[(3, 1)]), &f, 0, 9, 1).is_err());
    }
}
