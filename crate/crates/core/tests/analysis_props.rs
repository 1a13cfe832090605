mod common;

use common::*;
use isotwist::analysis::{search_integral_points, SearchHit};
use isotwist::analysis::{check_gdf, eqiv_conditions, independence_certificate, IsoClass};
use isotwist::constructions::{artin_schreier_twist, main_point_quadratic, main_points_quadratic, translates};
use isotwist::curves::{FPoint, TwistCurve};
use isotwist::{Error, Field, Poly};
use proptest::prelude::*;

fn x3_minus_x(f: &Field) -> Poly {
    terms(f, &[(3, 1), (1, -1)])
}

fn monic_squarefree_cubics(f: &Field) -> Vec<Poly> {
    let mut out = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                let p = Poly::new(f, vec![c, b, a, f.one()]);
                if p.is_squarefree() {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn check_hits(curve: &TwistCurve, hits: &[SearchHit]) {
    for h in hits {
        let p = h.point();
        assert!(curve.contains(&p));
        let gdf = check_gdf(curve, &p).unwrap();
        assert!(gdf.passed(), "{:?} {:?}", h, gdf.checks);
        match eqiv_conditions(curve, &p) {
            Ok(r) => assert!(r.consistent(), "{h:?}"),
            Err(Error::Precondition(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn oracle_is_sound_and_complete_on_factory_points() {
    for (q, n) in [(3u64, 1u32), (3, 2), (7, 1)] {
        let f = Field::prime(q).unwrap();
        let a = artin_schreier_twist(&f, n).unwrap();
        let hits = search_integral_points(&a, &x3_minus_x(&f), 0, usize::MAX, 1).unwrap();
        let curve = TwistCurve::quadratic(a, &x3_minus_x(&f)).unwrap();
        check_hits(&curve, &hits);
        let found: Vec<FPoint> = hits.iter().map(SearchHit::point).collect();
        for c in main_points_quadratic(&f, n).unwrap() {
            for t in translates(&c).unwrap() {
                for p in [t.point.clone(), curve.neg(&t.point).unwrap()] {
                    assert!(found.contains(&p), "q={q} n={n}: {} missing", t.label);
                }
            }
        }
        let mut sorted = hits.clone();
        sorted.sort_by(|x, y| x.f.cmp_canonical(&y.f).then(x.g.cmp_canonical(&y.g)));
        assert_eq!(sorted, hits);
    }
}

#[test]
fn hits_exist_exactly_on_the_progression_class() {
    for q in [3u64, 7] {
        let f = Field::prime(q).unwrap();
        let a = artin_schreier_twist(&f, 1).unwrap();
        // 2 deg F <= q - 1
        let max_deg = ((q - 1) / 2) as usize;
        for cubic in monic_squarefree_cubics(&f) {
            let class = IsoClass::of(&cubic).unwrap();
            let hits = search_integral_points(&a, &cubic, 0, max_deg, 1).unwrap();
            let curve = TwistCurve::quadratic(a.clone(), &cubic).unwrap();
            check_hits(&curve, &hits);
            assert_eq!(!hits.is_empty(), class.is_twist_of_standard(), "q={q} f={cubic} class={}", class.name());
        }
    }
}

#[test]
fn no_low_degree_points_when_q_is_1_mod_4() {
    for q in [5u64, 13] {
        let f = Field::prime(q).unwrap();
        let a = artin_schreier_twist(&f, 1).unwrap();
        let max_deg = ((q - 1) / 2) as usize;
        let catalog: Vec<Poly> = monic_squarefree_cubics(&f)
            .into_iter()
            .filter(|c| !IsoClass::of(c).unwrap().is_twist_of_standard())
            .take(if q == 5 { usize::MAX } else { 3 })
            .collect();
        assert!(!catalog.is_empty());
        for cubic in catalog {
            let hits = search_integral_points(&a, &cubic, 0, max_deg, 4).unwrap();
            assert!(hits.is_empty(), "q={q} f={cubic}: {hits:?}");
        }
    }
}

#[test]
fn equivalence_on_extension_field() {
    // A = t^27 - t splits over F_27
    let f = field(3, 3);
    let a = artin_schreier_twist(&f, 1).unwrap();
    let curve = TwistCurve::quadratic(a, &x3_minus_x(&f)).unwrap();
    let p = FPoint::affine(terms(&f, &[(13, 1)]), terms(&f, &[(6, 1)]));
    assert!(curve.contains(&p));
    let r = eqiv_conditions(&curve, &p).unwrap();
    assert!(r.cond_a && r.cond_b && r.cond_c && r.passed());
}

fn independence_pool() -> (TwistCurve, Vec<FPoint>) {
    let f = field(3, 1);
    let q1 = main_point_quadratic(&f, 3, 1).unwrap();
    let q3 = main_point_quadratic(&f, 3, 3).unwrap();
    let mut pts: Vec<FPoint> = translates(&q1).unwrap().into_iter().map(|c| c.point).collect();
    pts.push(q3.point);
    (q1.curve, pts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn independence_rank_bounded_and_order_free(idx in prop::collection::vec(0usize..4, 1..6), seed in any::<u64>()) {
        let (curve, pool) = independence_pool();
        let pts: Vec<FPoint> = idx.iter().map(|&i| pool[i].clone()).collect();
        let r = independence_certificate(&curve, &pts).unwrap();
        prop_assert!(r.rank <= pts.len());
        prop_assert_eq!(r.independent, r.rank == pts.len());
        let mut shuffled = pts.clone();
        let n = shuffled.len();
        shuffled.rotate_left((seed as usize) % n);
        if seed % 2 == 1 {
            shuffled.reverse();
        }
        prop_assert_eq!(independence_certificate(&curve, &shuffled).unwrap().rank, r.rank);
    }
}

#[test]
fn independence_examples() {
    let (curve, pool) = independence_pool();
    let r = independence_certificate(&curve, &[pool[0].clone(), pool[3].clone()]).unwrap();
    assert_eq!(r.rank, 2);
    assert!(r.independent);
    let r = independence_certificate(&curve, &[pool[0].clone(), pool[0].clone()]).unwrap();
    assert_eq!((r.rank, r.independent), (1, false));
    assert_eq!(r.point_count, 4);
    assert_eq!(r.trace.rem_euclid(3), 0);
}
