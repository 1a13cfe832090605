use super::{Fe, Field};
use crate::{Error, Result};

/// A field embedding `F_{p^a} -> F_{p^b}` with `a | b`.
///
/// The image of the generator class `t` is the smallest root (by canonical
/// index) of the source modulus inside the target field.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    // images of 1, w, w^2, ..., w^{a-1}
    basis: Vec<Fe>,
}

impl Embedding {
    pub fn new(source: &Field, target: &Field) -> Result<Embedding> {
        if source.p() != target.p() || !target.l().is_multiple_of(source.l()) {
            return Err(Error::Precondition(format!("{source} does not embed in {target}")));
        }
        if source.l() == 1 {
            return Ok(Embedding { source: source.clone(), target: target.clone(), basis: vec![Fe::ONE] });
        }
        let m: Vec<Fe> = source.modulus().iter().map(|&c| Fe(c)).collect();
        let eval = |x: Fe| m.iter().rev().fold(Fe::ZERO, |acc, &c| target.add(target.mul(acc, x), c));
        let w = target
            .elements()
            .find(|&x| eval(x).is_zero())
            .ok_or_else(|| Error::Inconsistent("modulus has no root in the target field".into()))?;
        let mut basis = Vec::with_capacity(source.l() as usize);
        let mut pw = Fe::ONE;
        for _ in 0..source.l() {
            basis.push(pw);
            pw = target.mul(pw, w);
        }
        Ok(Embedding { source: source.clone(), target: target.clone(), basis })
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn apply(&self, a: Fe) -> Fe {
        if self.source.l() == 1 {
            return a;
        }
        let t = &self.target;
        self.source
            .digits(a)
            .iter()
            .zip(&self.basis)
            .fold(Fe::ZERO, |acc, (&d, &b)| t.add(acc, t.mul(t.from_int(d as i64), b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f9_into_f81_is_a_ring_map() {
        let small = Field::new(3, 2).unwrap();
        let big = Field::new(3, 4).unwrap();
        let e = Embedding::new(&small, &big).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(e.apply(small.mul(a, b)), big.mul(e.apply(a), e.apply(b)));
                assert_eq!(e.apply(small.add(a, b)), big.add(e.apply(a), e.apply(b)));
            }
        }
    }

    #[test]
    fn incompatible_degrees_are_rejected() {
        let a = Field::new(2, 2).unwrap();
        let b = Field::new(2, 3).unwrap();
        assert!(Embedding::new(&a, &b).is_err());
    }
}
