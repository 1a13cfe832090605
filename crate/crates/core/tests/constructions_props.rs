mod common;

use common::*;
use isotwist::analysis::beta_of;
use isotwist::constructions::{
    distinct_orbits, general_point_cubic, general_point_quadratic, hermitian_identity_check, main_point_cubic,
    main_point_quadratic, main_points_cubic, main_points_quadratic, orthogonal_group, scaled, tau_points, translates,
    TauKind,
};
use isotwist::curves::FPoint;
use isotwist::Field;
use proptest::prelude::*;

fn pw(q: u64, e: u32) -> usize {
    q.pow(e) as usize
}

#[test]
fn quadratic_main_points() {
    for (q, ns) in [(3u64, vec![1u32, 2, 3, 4]), (7, vec![1, 2]), (11, vec![1, 2])] {
        let f = Field::from_order(q).unwrap();
        for n in ns {
            let pts = main_points_quadratic(&f, n).unwrap();
            assert_eq!(pts.len(), (1..=n).filter(|k| n % k == 0 && k % 2 == 1).count());
            for c in &pts {
                assert!(c.verified(), "{}", c.label);
                assert_eq!(c.separable, Some(true));
                assert!(c.point.is_integral());
            }
            let ks: Vec<u32> = (1..=n).filter(|k| n % k == 0 && k % 2 == 1).collect();
            for (c, &k) in pts.iter().zip(&ks) {
                let (qk, base) = (pw(q, k), pw(q, n - k));
                assert_eq!(c.degrees(), (Some(base * (qk - 1) / 2), Some(base * (qk - 3) / 4)), "q={q} n={n} k={k}");
                // G^2 = beta F' with F' = (q^k - 1)/2 G^2, so beta = -2
                let (x, y) = c.point.polys().unwrap();
                let beta = beta_of(x, y).expect("G^2 is a constant multiple of F'");
                assert_eq!(beta, f.from_int(-2));
            }
            let curve = pts[0].curve.clone();
            let points: Vec<FPoint> = pts.iter().map(|c| c.point.clone()).collect();
            assert_eq!(distinct_orbits(&curve, &points).unwrap(), pts.len());
        }
    }
}

#[test]
fn cubic_main_points() {
    for (q, ns) in [(2u64, vec![1u32, 3, 5]), (5, vec![1, 3]), (8, vec![1])] {
        let f = Field::from_order(q).unwrap();
        for n in ns {
            let pts = main_points_cubic(&f, n).unwrap();
            assert!(!pts.is_empty());
            for c in &pts {
                assert!(c.verified(), "{}", c.label);
                assert_eq!(c.separable, Some(true), "{}", c.label);
            }
            let curve = pts[0].curve.clone();
            let points: Vec<FPoint> = pts.iter().map(|c| c.point.clone()).collect();
            assert_eq!(distinct_orbits(&curve, &points).unwrap(), pts.len());
        }
    }
    let f2 = field(2, 1);
    for k in [1u32, 3] {
        let c = main_point_cubic(&f2, 3, k).unwrap();
        let (qk, base) = (pw(2, k), pw(2, 3 - k));
        assert_eq!(c.degrees(), (Some(base * (qk - 2) / 3), Some(base * (qk - 1))));
    }
}

#[test]
fn factories_reject_bad_parameters() {
    let f3 = field(3, 1);
    assert!(main_point_quadratic(&f3, 4, 2).is_err());
    assert!(main_point_quadratic(&f3, 3, 2).is_err());
    assert!(main_point_quadratic(&field(5, 1), 1, 1).is_err());
    assert!(main_point_cubic(&f3, 1, 1).is_err());
    assert!(main_point_cubic(&field(7, 1), 1, 1).is_err());
}

#[test]
fn variants_stay_on_their_curves() {
    let f = field(7, 1);
    let c = main_point_quadratic(&f, 1, 1).unwrap();
    let ts = translates(&c).unwrap();
    assert_eq!(ts.len(), 7);
    for t in &ts {
        assert!(t.verified());
        assert_eq!(t.curve, c.curve);
    }
    let pts: Vec<FPoint> = ts.iter().map(|t| t.point.clone()).collect();
    assert_eq!(distinct_orbits(&c.curve, &pts).unwrap(), 7);
    for s in scaled(&c).unwrap() {
        assert!(s.verified());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn general_points_verify(
        q in prop::sample::select(vec![3u64, 7]),
        k in prop::sample::select(vec![1u32]),
        cof in prop::collection::vec(0u64..7, 1..3),
    ) {
        let f = Field::prime(q).unwrap();
        let c = isotwist::Poly::new(&f, cof.iter().map(|&i| f.elem(i % q).unwrap()).collect());
        prop_assume!(!c.is_zero());
        let a0 = &c * &terms(&f, &[(k as usize, 1), (0, -1)]);
        // A = A_0(F) is squarefree iff its linear coefficient is nonzero
        prop_assume!(!a0.eval(isotwist::algebra::Fe::ZERO).is_zero());
        let g = general_point_quadratic(&a0, k).unwrap();
        prop_assert!(g.verified());
        prop_assert!(g.point.is_integral());
    }

    #[test]
    fn general_cubic_points_verify(cof in prop::collection::vec(0u64..2, 1..4), k in prop::sample::select(vec![1u32, 3])) {
        let f = field(2, 1);
        let c = isotwist::Poly::new(&f, cof.iter().map(|&i| f.elem(i).unwrap()).collect());
        prop_assume!(!c.is_zero());
        let a0 = &c * &terms(&f, &[(k as usize, 1), (0, -1)]);
        prop_assume!(!a0.eval(isotwist::algebra::Fe::ZERO).is_zero());
        let g = general_point_cubic(&a0, k).unwrap();
        prop_assert!(g.verified());
    }
}

#[test]
fn hermitian_identity_on_orthogonal_group() {
    for q in [3u64, 5, 7, 9, 11] {
        let f = Field::from_order(q).unwrap();
        let group = orthogonal_group(&f).unwrap();
        // |O(2, q)| = 2 (q - (-1)^((q-1)/2))
        let eps: i64 = if q % 4 == 1 { 1 } else { -1 };
        assert_eq!(group.len() as i64, 2 * (q as i64 - eps), "q = {q}");
        for m in &group {
            assert!(m.is_orthogonal(&f));
            for k in 1..=2 {
                assert!(hermitian_identity_check(&f, m, k).unwrap(), "q={q} m={m:?} k={k}");
            }
        }
    }
}

#[test]
fn tau_points_verify() {
    for (q, kind) in [(3u64, TauKind::Quartic), (7, TauKind::Quartic), (11, TauKind::Quartic), (5, TauKind::Sextic), (11, TauKind::Sextic)] {
        let f = Field::prime(q).unwrap();
        for n in [1u32, 3] {
            let tp = tau_points(&f, n, kind).unwrap();
            if tp.matrix.is_none() {
                assert!(tp.points.is_empty());
                continue;
            }
            for (_, c) in &tp.points {
                assert!(c.verified(), "q={q} {} n={n} {}", kind.name(), c.label);
            }
        }
    }
    assert!(tau_points(&field(5, 1), 1, TauKind::Quartic).is_err());
    assert!(tau_points(&field(7, 1), 2, TauKind::Quartic).is_err());
}
