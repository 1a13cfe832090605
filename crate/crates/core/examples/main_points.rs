//! One separable integral point per odd divisor of n on
//! (t^{q^n} - t) y^2 = x^3 - x, and the cubic analogue.

use isotwist::constructions::{distinct_orbits, main_points_cubic, main_points_quadratic, translates};
use isotwist::Field;

fn main() -> isotwist::Result<()> {
    let f3 = Field::prime(3)?;
    let pts = main_points_quadratic(&f3, 3)?;
    for c in &pts {
        println!("{}: {:?} on {}  verified={} separable={:?}", c.label, c.degrees(), c.curve, c.verified(), c.separable);
    }
    let raw: Vec<_> = pts.iter().map(|c| c.point.clone()).collect();
    println!("distinct orbits: {}", distinct_orbits(&pts[0].curve, &raw)?);

    let f2 = Field::prime(2)?;
    for c in main_points_cubic(&f2, 5)? {
        println!("{}: {:?} on {}  verified={}", c.label, c.degrees(), c.curve, c.verified());
    }

    let q1 = &main_points_quadratic(&f3, 2)?[0];
    let ts = translates(q1)?;
    println!("{} translates of {}, all on the same curve: {}", ts.len(), q1.label, ts.iter().all(|c| c.curve == q1.curve));
    Ok(())
}
