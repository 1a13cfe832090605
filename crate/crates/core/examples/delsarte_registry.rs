//! Runs the worked Delsarte surfaces: lines on Fermat covers, their
//! images, and the sections obtained by substitution.

use isotwist::delsarte::{fermat_cover, registry, IDENTITY};

fn main() -> isotwist::Result<()> {
    for entry in registry()? {
        let (n, _) = fermat_cover(&entry.surface.a, &IDENTITY)?;
        let report = entry.run()?;
        println!("{:<22} F_{:<3} d={:<2} cover F_{n:<3} {}", entry.name, entry.field.order(), entry.d,
            if report.passed() { "ok" } else { "FAILED" });
        for (label, point) in &report.sections {
            println!("    {label}: {}", isotwist::json::to_line(&isotwist::json::point(point)));
        }
    }
    Ok(())
}
