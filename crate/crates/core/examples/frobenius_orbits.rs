//! The descended Frobenius on a quadratic twist: images are inseparable,
//! and walking preimages recovers the orbit root.

use isotwist::curves::{FPoint, TwistCurve};
use isotwist::{Field, Poly};

fn main() -> isotwist::Result<()> {
    let f3 = Field::prime(3)?;
    let a = Poly::from_terms(&f3, &[(3, 1), (1, -1)]);
    let c = TwistCurve::quadratic(a, &Poly::from_terms(&f3, &[(3, 1), (1, -1)]))?;
    let p = FPoint::affine(Poly::t(&f3), Poly::one(&f3));
    let mut cur = p.clone();
    for i in 0..3 {
        let (root, steps) = c.orbit_root(&cur)?;
        println!("step {i}: separable {}, root reached after {steps} ({})", c.is_separable(&cur)?, root == p);
        cur = c.frobenius_step(&cur)?;
    }
    let sum = c.add(&p, &c.frobenius_step(&p)?)?;
    println!("P + Frob(P) on the curve: {}", c.contains(&sum));
    Ok(())
}
