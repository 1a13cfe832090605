//! Orthogonal 2x2 matrices, the Hermitian identity they satisfy, and the
//! divisor-indexed points on y^2 = x^3 - (t^{q^n+1} + 1) x.

use isotwist::constructions::{hermitian_identity_check, orthogonal_group, tau_points, TauKind};
use isotwist::Field;

fn main() -> isotwist::Result<()> {
    for q in [3u64, 5, 7, 11] {
        let f = Field::prime(q)?;
        let g = orthogonal_group(&f)?;
        let mut ok = true;
        for m in &g {
            ok &= hermitian_identity_check(&f, m, 1)? && hermitian_identity_check(&f, m, 2)?;
        }
        let with_cd = g.iter().filter(|m| m.cd_nonzero()).count();
        println!("O(2, F_{q}): {} matrices, {with_cd} with cd != 0, identity holds: {ok}", g.len());
    }

    let f7 = Field::prime(7)?;
    let r = tau_points(&f7, 3, TauKind::Quartic)?;
    println!("quartic q=7 n=3: {}", r.status);
    for (k, c) in &r.points {
        println!("  k={k}: degrees {:?}, verified {}", c.degrees(), c.verified());
    }
    println!("quartic q=3: {}", tau_points(&Field::prime(3)?, 1, TauKind::Quartic)?.status);
    Ok(())
}
