//! Beyond three dimensions outer angles are Monte Carlo estimates with a Hoeffding bound.

use polycurv::{fixtures, gauss_bonnet_report, ConeValuation, MonteCarloConfig, DEFAULT_TOLERANCE};

fn main() -> polycurv::Result<()> {
    let mc = MonteCarloConfig::new(200_000, 42, 1.0 - 1e-6);
    let report = gauss_bonnet_report(
        &fixtures::hypercube(4),
        &ConeValuation::uniform_with(mc),
        DEFAULT_TOLERANCE,
    )?;
    for c in report.points.iter().take(4) {
        println!(
            "{}  κ = {:.5} ± {:.5}  (exact 1/16 = 0.0625)",
            c.point, c.value, c.abs_error
        );
    }
    println!("... {} vertices in total", report.points.len());
    println!(
        "sum = {:.5} ± {:.5}, χ = {}, pass = {}",
        report.curvature_sum.value,
        report.curvature_sum.abs_error,
        report.euler_characteristic,
        report.pass
    );
    Ok(())
}
