//! Curvature of unions: reflex corners get negative curvature.

use polycurv::{
    fixtures, gauss_bonnet_report, hadwiger_curvature, ConeValuation, RatVector, DEFAULT_TOLERANCE,
};

fn main() -> polycurv::Result<()> {
    let l = fixtures::l_shape();
    let reflex = RatVector::from_ints(&[1, 1]);
    println!(
        "L-shape, κ at the reflex corner {reflex}: {}",
        hadwiger_curvature(&l, &reflex)?.value
    );

    let annulus = fixtures::square_annulus();
    let report = gauss_bonnet_report(&annulus, &ConeValuation::uniform(), DEFAULT_TOLERANCE)?;
    println!("square annulus (4 overlapping boxes):");
    for c in report.points.iter().filter(|c| c.value.abs() > 1e-12) {
        println!("  {}  κ = {:+.4}", c.point, c.value);
    }
    println!(
        "  sum = {:.12}, χ = {}",
        report.curvature_sum.value, report.euler_characteristic
    );
    Ok(())
}
