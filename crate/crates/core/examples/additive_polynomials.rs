//! The ring isomorphism between F_q[t] and additive polynomials under
//! composition, and the trace polynomials behind every main point.

use isotwist::additive::{divisor_witness, trace_poly, witness_identity_holds, AdditivePoly};
use isotwist::{Field, Poly};

fn main() -> isotwist::Result<()> {
    let f3 = Field::prime(3)?;
    let p = Poly::from_terms(&f3, &[(2, 1), (0, 1)]);
    let q = Poly::from_terms(&f3, &[(1, 1), (0, -1)]);
    let (ap, aq) = (AdditivePoly::from_poly(&p), AdditivePoly::from_poly(&q));
    let lhs = AdditivePoly::from_poly(&(&p * &q)).expand()?;
    let rhs = ap.compose(&aq)?.expand()?;
    println!("({p})({q}) as an additive polynomial: {lhs}");
    println!("matches the composition: {}", lhs == rhs);

    let t = trace_poly(&f3, 3, 1)?;
    println!("T^3_1 = {}", t.expand()?);

    // A0 = t^3 - 1 is divisible by t - 1; B = A0 / (t - 1)
    let a0 = Poly::from_terms(&f3, &[(3, 1), (0, -1)]);
    let b = divisor_witness(&a0, 1)?;
    println!("B = {}", b.expand()?);
    println!("A0(F) = B^q - B: {}", witness_identity_holds(&a0, &b, 1)?);
    Ok(())
}
