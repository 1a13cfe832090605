mod common;

use common::*;
use isotwist::additive::{divisor_witness, trace_poly, witness_identity_holds, AdditivePoly};
use isotwist::algebra::Embedding;
use isotwist::{Field, Poly};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_isomorphism((_f, ps) in field_and_polys(2, 5)) {
        let (p, q) = (&ps[0], &ps[1]);
        let (ap, aq) = (AdditivePoly::from_poly(p), AdditivePoly::from_poly(q));
        prop_assert_eq!(AdditivePoly::from_poly(&(p * q)), ap.compose(&aq).unwrap());
        prop_assert_eq!(AdditivePoly::from_poly(&(p + q)), ap.add(&aq).unwrap());
    }

    #[test]
    fn compose_matches_expansion((_f, ps) in field_and_polys(2, 2)) {
        let (ap, aq) = (AdditivePoly::from_poly(&ps[0]), AdditivePoly::from_poly(&ps[1]));
        let lhs = ap.compose(&aq).unwrap().expand().unwrap();
        let rhs = ap.expand().unwrap().compose(&aq.expand().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn additivity_in_cubic_extension(
        (p, l) in prop::sample::select(vec![(2u64, 1u32), (3, 1), (5, 1), (2, 2)]),
        coeffs in prop::collection::vec(0u64..4, 1..4),
        x in 0u64..4096, y in 0u64..4096, c in 0u64..4,
    ) {
        let f = field(p, l);
        let big = Field::new(p, 3 * l).unwrap();
        let e = Embedding::new(&f, &big).unwrap();
        let a = AdditivePoly::new(&f, coeffs.iter().map(|&i| f.elem(i % f.order()).unwrap()).collect());
        let (x, y) = (big.elem(x % big.order()).unwrap(), big.elem(y % big.order()).unwrap());
        let c = e.apply(f.elem(c % f.order()).unwrap());
        let ax = a.eval_in(&e, x).unwrap();
        prop_assert_eq!(a.eval_in(&e, big.add(x, y)).unwrap(), big.add(ax, a.eval_in(&e, y).unwrap()));
        prop_assert_eq!(a.eval_in(&e, big.mul(c, x)).unwrap(), big.mul(c, ax));
    }

    #[test]
    fn witness_identity(
        (f, ps) in field_and_polys(1, 4),
        k in 1u32..3,
    ) {
        // A0 = C (t^k - 1) for a random C
        let a0 = &ps[0] * &Poly::from_terms(&f, &[(k as usize, 1), (0, -1)]);
        prop_assume!(!a0.is_zero() && a0.deg().unwrap() <= 5);
        let b = divisor_witness(&a0, k).unwrap();
        prop_assert!(witness_identity_holds(&a0, &b, k).unwrap());
    }
}

#[test]
fn trace_onto_prime_field() {
    let f3 = field(3, 1);
    let f27 = field(3, 3);
    let e = Embedding::new(&f3, &f27).unwrap();
    let t = trace_poly(&f3, 3, 1).unwrap();
    let mut image = Vec::new();
    for x in f27.elements() {
        let v = t.eval_in(&e, x).unwrap();
        assert!(f27.in_prime_field(v));
        if !image.contains(&v) {
            image.push(v);
        }
    }
    assert_eq!(image.len(), 3);
    // on F_3 itself the trace is 3x = 0
    for x in f3.elements() {
        assert!(t.eval_in(&e, e.apply(x)).unwrap().is_zero());
    }
}

#[test]
fn divisor_witness_requires_divisibility() {
    let f3 = field(3, 1);
    assert!(divisor_witness(&terms(&f3, &[(2, 1), (0, 1)]), 1).is_err());
}
