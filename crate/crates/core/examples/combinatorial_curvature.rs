//! The combinatorial curvature depends on the triangulation; the angle curvature does not.

use polycurv::analysis::euler_characteristic_complex;
use polycurv::complexes::{combinatorial_curvature_c, complex_curvature_g};
use polycurv::{fixtures, RatVector, Rational};

fn main() -> polycurv::Result<()> {
    let origin = RatVector::from_ints(&[0, 0]);
    for (name, z) in [
        ("main diagonal", fixtures::square_main_diagonal()),
        ("anti-diagonal", fixtures::square_anti_diagonal()),
    ] {
        let total: Rational = z
            .vertices()
            .iter()
            .map(|x| combinatorial_curvature_c(&z, x))
            .sum();
        println!(
            "{name}: C(Z, o) = {}, G(Z, o) = {:.6}, Σ C = {}, χ = {}",
            combinatorial_curvature_c(&z, &origin),
            complex_curvature_g(&z, &origin)?.value,
            total,
            euler_characteristic_complex(&z)
        );
    }
    Ok(())
}
