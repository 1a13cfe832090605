//! Exhaustive search on (t^7 - t) y^2 = x^3 - x over F_7, with the
//! divisibility bound and the three equivalent conditions on every hit.

use isotwist::analysis::{check_gdf, eqiv_conditions, search_integral_points};
use isotwist::curves::TwistCurve;
use isotwist::{Field, Poly};

fn main() -> isotwist::Result<()> {
    let f7 = Field::prime(7)?;
    let a = Poly::from_terms(&f7, &[(7, 1), (1, -1)]);
    let f = Poly::from_terms(&f7, &[(3, 1), (1, -1)]);
    let curve = TwistCurve::quadratic(a.clone(), &f)?;
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let hits = search_integral_points(&a, &f, 0, usize::MAX, jobs)?;
    println!("{} points on {curve}", hits.len());
    for h in &hits {
        let p = h.point();
        let gdf = check_gdf(&curve, &p)?;
        let eq = eqiv_conditions(&curve, &p)?;
        println!("  F = {:<24} G = {:<6} G|F' {}  A={} B={} C={} beta={:?}  {}",
            h.f.to_string(), h.g.to_string(), gdf.passed(), eq.cond_a, eq.cond_b, eq.cond_c,
            eq.beta.map(|b| b.index()), eq.class.name());
    }

    // q = 1 mod 4: no point with 2 deg F <= q - 1 on a twist of x^3 + 1
    let f5 = Field::prime(5)?;
    let a5 = Poly::from_terms(&f5, &[(5, 1), (1, -1)]);
    let c5 = Poly::from_terms(&f5, &[(3, 1), (0, 1)]);
    println!("x^3 + 1 over F_5: {} hits", search_integral_points(&a5, &c5, 0, 2, 1)?.len());
    Ok(())
}
