//! Outer angles at the vertices of convex polytopes sum to one.

use polycurv::{fixtures, gauss_bonnet_report, ConeValuation, DEFAULT_TOLERANCE};

fn main() -> polycurv::Result<()> {
    let phi = ConeValuation::uniform();
    for (name, p) in [
        ("unit square", fixtures::unit_square()),
        ("unit cube", fixtures::unit_cube()),
        ("regular tetrahedron", fixtures::regular_tetrahedron()),
    ] {
        let report = gauss_bonnet_report(&p, &phi, DEFAULT_TOLERANCE)?;
        println!("{name}:");
        for c in &report.points {
            println!("  {}  Γ = {:.6}", c.point, c.value);
        }
        println!(
            "  sum = {:.12}, χ = {}, pass = {}",
            report.curvature_sum.value, report.euler_characteristic, report.pass
        );
    }
    Ok(())
}
