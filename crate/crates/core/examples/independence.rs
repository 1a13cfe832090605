//! Pullback coefficients of the main points and their rank over F_q.

use isotwist::analysis::independence_certificate;
use isotwist::constructions::main_points_quadratic;
use isotwist::Field;

fn main() -> isotwist::Result<()> {
    for (q, n) in [(3u64, 3u32), (3, 5), (7, 3)] {
        let f = Field::prime(q)?;
        let pts = main_points_quadratic(&f, n)?;
        let raw: Vec<_> = pts.iter().map(|c| c.point.clone()).collect();
        let r = independence_certificate(&pts[0].curve, &raw)?;
        let phis: Vec<String> = r.phis.iter().map(|p| p.to_string()).collect();
        println!("q={q} n={n}: #E(F_q)={} rank {} of {} -> {:?}", r.point_count, r.rank, raw.len(), phis);
    }
    Ok(())
}
