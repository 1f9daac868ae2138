//! Angle identities on polyhedral and conic complexes.

use polycurv::complexes::{brin_check, conic_gamma_sum, local_euler_sum, sommerville_check};
use polycurv::{fixtures, PolyhedralCone, DEFAULT_TOLERANCE};

fn main() -> polycurv::Result<()> {
    let z = fixtures::l_shape_complex();
    println!("L-shape triangulation: {} cells", z.cells().len());
    for x in z.vertices() {
        let c = brin_check(&z, &x, DEFAULT_TOLERANCE)?;
        println!(
            "  {x}: G = {:+.4}, Γ(|Z|) = {:+.4}, {}",
            c.lhs.value,
            c.rhs.value,
            if c.pass { "pass" } else { "FAIL" }
        );
    }

    for c in [
        PolyhedralCone::orthant(2),
        PolyhedralCone::orthant(3),
        PolyhedralCone::full_space(2),
    ] {
        let s = sommerville_check(&c, DEFAULT_TOLERANCE)?;
        println!(
            "alternating face sum {:.6} vs Γ(C) {:.6}",
            s.lhs.value, s.rhs.value
        );
    }

    let fan = conic_gamma_sum(&fixtures::quadrant_fan(), DEFAULT_TOLERANCE)?;
    println!(
        "quadrant fan: Γ(R²) = {:.6}, alternating sum = {:.6}",
        fan.lhs.value, fan.rhs.value
    );

    let cube = polycurv::ConvexPolytope::axis_box(
        &polycurv::RatVector::from_ints(&[0, 0, 0]),
        &polycurv::RatVector::from_ints(&[1, 1, 1]),
    )?;
    let edge = &cube.faces(1)[0];
    println!(
        "local Euler sum at a cube edge: {}",
        local_euler_sum(&cube, edge)?
    );
    Ok(())
}
