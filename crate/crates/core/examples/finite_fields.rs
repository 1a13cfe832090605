//! Arithmetic in F_81 and the residue test used by point counting.

use isotwist::{Field, Poly};

fn main() -> isotwist::Result<()> {
    let f = Field::new(3, 4)?;
    println!("F_{} with modulus {:?} (ascending coefficients)", f.order(), f.modulus());

    let g = f.primitive_element();
    println!("generator has order {}", f.order_of(g)?);

    let a = f.from_digits(&[1, 2, 0, 1])?;
    let b = f.inv(a)?;
    println!("{:?} * {:?} = {:?}", f.digits(a), f.digits(b), f.digits(f.mul(a, b)));
    println!("frobenius of a: {:?}; trace to F_3: {:?}", f.digits(f.frobenius(a, 1)), f.digits(f.absolute_trace(a)));

    for m in [2, 4, 5] {
        let r = f.residue(a, m);
        println!("a is an m-th power for m = {m}: {}", r.is_residue);
    }

    let p = Poly::from_terms(&f, &[(9, 1), (1, -1)]);
    println!("roots of {p}: {}", p.roots()?.len());
    Ok(())
}
