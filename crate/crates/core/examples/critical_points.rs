//! Indices of the height function ⟨ξ, ·⟩ sum to the Euler characteristic.

use polycurv::{critical_point_report, fixtures, RatVector, DEFAULT_TOLERANCE};

fn main() -> polycurv::Result<()> {
    let xi = RatVector::from_ints(&[1, 2]);
    for (name, p) in [
        ("unit square", fixtures::unit_square()),
        ("square annulus", fixtures::square_annulus()),
        ("two disjoint squares", fixtures::two_disjoint_squares()),
    ] {
        let report = critical_point_report(&p, &xi, DEFAULT_TOLERANCE)?;
        let critical: Vec<String> = report
            .points
            .iter()
            .filter(|c| c.value != 0.0)
            .map(|c| format!("{} ({:+})", c.point, c.value))
            .collect();
        println!(
            "{name}: critical points {}, sum {}, χ {}",
            critical.join(" "),
            report.curvature_sum.value,
            report.euler_characteristic
        );
    }

    let flat = RatVector::from_ints(&[0, 1]);
    match critical_point_report(&fixtures::unit_square(), &flat, DEFAULT_TOLERANCE) {
        Err(e) => println!("ξ = {flat}: {e}"),
        Ok(_) => unreachable!("the top edge is a whole support set"),
    }
    Ok(())
}
