//! Monte Carlo curvature from Euler characteristics of sampled halfspace sections.

use polycurv::{
    fixtures, hadwiger_curvature, mc_halfsphere_curvature, MonteCarloConfig, RatVector,
};

fn main() -> polycurv::Result<()> {
    let cases = [
        (
            "square",
            fixtures::unit_square(),
            RatVector::from_ints(&[0, 0]),
        ),
        (
            "cube",
            fixtures::unit_cube(),
            RatVector::from_ints(&[1, 1, 1]),
        ),
        (
            "L-shape",
            fixtures::l_shape(),
            RatVector::from_ints(&[1, 1]),
        ),
    ];
    for (name, p, x) in cases {
        let exact = hadwiger_curvature(&p, &x)?.value;
        let est = mc_halfsphere_curvature(&p, &x, &MonteCarloConfig::new(100_000, 1, 1.0 - 1e-6))?;
        println!(
            "{name} at {x}: exact {exact:+.4}, estimate {:+.4} ± {:.4}",
            est.value, est.abs_error
        );
    }
    Ok(())
}
