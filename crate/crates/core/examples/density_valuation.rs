//! Any probability density on the sphere gives a curvature satisfying Gauss-Bonnet.

use polycurv::angle::{Monomial, PolynomialDensity};
use polycurv::{
    fixtures, gauss_bonnet_report, ConeValuation, MonteCarloConfig, SphereMeasure,
    DEFAULT_TOLERANCE,
};

fn main() -> polycurv::Result<()> {
    // 2·u₁² integrates to one against the uniform measure on the circle.
    let density = PolynomialDensity {
        terms: vec![Monomial {
            coefficient: 2.0,
            exponents: vec![2, 0],
        }],
    };
    let mu = SphereMeasure::polynomial("2x²", density, 2.0);
    let phi = ConeValuation::from_measure(mu, MonteCarloConfig::new(100_000, 7, 1.0 - 1e-6));
    let report = gauss_bonnet_report(&fixtures::l_shape(), &phi, DEFAULT_TOLERANCE)?;
    for c in report.points.iter().filter(|c| c.value.abs() > 1e-12) {
        println!("{}  κ = {:+.4} ± {:.4}", c.point, c.value, c.abs_error);
    }
    println!(
        "sum = {:.4} ± {:.4}, χ = {}, pass = {}",
        report.curvature_sum.value,
        report.curvature_sum.abs_error,
        report.euler_characteristic,
        report.pass
    );
    Ok(())
}
