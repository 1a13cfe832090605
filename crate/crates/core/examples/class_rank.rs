//! Jacobian orders of s^2 = t^{q^n} - t and s^3 = t^{q^n} - t, and the
//! divisibility they must satisfy.

use isotwist::classgroup::{class_rank_witness, ClassFamily};
use isotwist::Field;

fn main() -> isotwist::Result<()> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    for (q, n, fam) in [(3u64, 1u32, ClassFamily::Square), (2, 3, ClassFamily::Cube), (3, 3, ClassFamily::Square)] {
        let r = class_rank_witness(&Field::prime(q)?, n, fam, jobs)?;
        println!("{} q={q} n={n}: g={} #J={} required {} -> {}", fam.name(), r.zeta.genus,
            r.zeta.jacobian_order(), r.required_divisor, r.verdict);
        for d in &r.per_m {
            println!("    m={}: m^tau | #J {}, m | exponent of E(F_q) {}", d.m, d.order_divides, d.within_exponent);
        }
    }
    Ok(())
}
