mod common;

use common::*;
use isotwist::algebra::RatFunc;
use isotwist::delsarte::{
    adjugate, apply_map, det, fermat_cover, map_certificate, mat_mul, registry, Mat4, Multisection, ParamCurve,
};
use isotwist::Field;
use proptest::prelude::*;

#[test]
fn registry_passes() {
    let entries = registry().unwrap();
    assert!(entries.len() >= 6);
    for e in &entries {
        let r = e.run().unwrap();
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.1).map(|c| &c.0).collect();
        assert!(r.passed(), "{}: {failed:?}", r.name);
    }
}

#[test]
fn registry_maps_have_certificates() {
    for e in registry().unwrap() {
        let (d, b) = fermat_cover(&e.surface.a, &identity()).unwrap();
        assert_eq!(d, e.expected_min_cover, "{}", e.name);
        let (n, _) = map_certificate(&e.surface.a, &e.map).expect("A B - diag(N) has equal rows");
        assert!(n.iter().all(|&x| x != 0), "{}", e.name);
        let _ = b;
    }
}

fn identity() -> Mat4 {
    let mut m = [[0i64; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

fn mat() -> impl Strategy<Value = Mat4> {
    prop::array::uniform4(prop::array::uniform4(-4i64..=4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjugate_inverts(a in mat()) {
        let adj = adjugate(&a);
        let d = det(&a);
        for i in 0..4 {
            for j in 0..4 {
                let s: i128 = (0..4).map(|k| a[i][k] as i128 * adj[k][j]).sum();
                prop_assert_eq!(s, if i == j { d } else { 0 });
            }
        }
    }

    #[test]
    fn fermat_cover_is_minimal(a in mat(), c in mat(), m in 1i64..60) {
        prop_assume!(det(&a) != 0);
        let (d, b) = fermat_cover(&a, &c).unwrap();
        prop_assert!(d > 0);
        // d A^{-1} C = B, so A B = d C
        let ab = mat_mul(&a, &b);
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(ab[i][j], d * c[i][j]);
            }
        }
        // any m with m A^{-1} C integral is a multiple of d
        let adj = adjugate(&a);
        let dt = det(&a);
        let integral = (0..4).all(|i| (0..4).all(|j| {
            let v: i128 = (0..4).map(|k| adj[i][k] * c[k][j] as i128).sum();
            (m as i128 * v) % dt == 0
        }));
        if integral {
            prop_assert_eq!(m % d, 0);
        }
    }

    #[test]
    fn apply_map_respects_projective_scaling(
        rows in prop::array::uniform3(prop::array::uniform3(-3i64..=3)),
        last in prop::array::uniform3(-3i64..=3),
        coeffs in prop::array::uniform4(1u64..7),
        exps in prop::array::uniform4(-3i64..=3),
        s in (1u64..7, -4i64..=4),
    ) {
        // rows summing to r on the fiber coordinates and 0 on the base
        let f = Field::prime(7).unwrap();
        let mut b = [[0i64; 4]; 4];
        let r = 2;
        for j in 0..3 {
            b[j][..3].copy_from_slice(&rows[j]);
            b[j][3] = r - rows[j].iter().sum::<i64>();
        }
        b[3][..3].copy_from_slice(&last);
        b[3][3] = -last.iter().sum::<i64>();
        let g = ParamCurve::monomials(&f, std::array::from_fn(|i| (f.elem(coeffs[i]).unwrap(), exps[i])));
        let scale = RatFunc::laurent_monomial(&f, f.elem(s.0).unwrap(), s.1);
        let m1 = Multisection::from_image(&apply_map(&b, &g).unwrap()).unwrap();
        let m2 = Multisection::from_image(&apply_map(&b, &g.scale(&scale)).unwrap()).unwrap();
        prop_assert_eq!(m1, m2);
    }
}

// The covers are weighted diagonal surfaces `sum c_i u_i^{N_i}`: scaling
// `u_k` by `s^{L/N_k}` with `L = lcm(N)` is an equivalence of points.
#[test]
fn registry_lines_are_weighted_scaling_invariant() {
    use num_integer::Integer;
    for e in registry().unwrap() {
        let f = e.field.clone();
        let (n, _) = map_certificate(&e.surface.a, &e.map).unwrap();
        let l = n.iter().fold(1i64, |l, &x| l.lcm(&x));
        let s = RatFunc::laurent_monomial(&f, f.from_int(-1), 3);
        for case in &e.lines {
            let scaled = ParamCurve(std::array::from_fn(|k| case.line.0[k].mul(&s.pow_i(l / n[k]).unwrap())));
            let a = apply_map(&e.map, &case.line).unwrap();
            let b = apply_map(&e.map, &scaled).unwrap();
            if let (Ok(ma), Ok(mb)) = (Multisection::from_image(&a), Multisection::from_image(&b)) {
                assert_eq!(ma, mb, "{} {}", e.name, case.label);
            }
        }
    }
}

#[test]
fn singular_exponent_matrix_rejected() {
    let mut a = identity();
    a[3] = a[2];
    assert!(fermat_cover(&a, &identity()).is_err());
    let _ = field(2, 1);
}
