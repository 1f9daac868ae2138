//! Duality, lineality and faces of polyhedral cones.

use polycurv::{outer_angle, solid_angle, PolyhedralCone, RatVector};

fn main() -> polycurv::Result<()> {
    let v = |c: &[i64]| RatVector::from_ints(c);
    let wedge = PolyhedralCone::from_generators(2, &[v(&[1, 0]), v(&[1, 2])], &[])?;
    let dual = wedge.dual();
    println!(
        "C  rays {:?}",
        wedge
            .rays()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
    );
    println!(
        "C° rays {:?}",
        dual.rays()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
    );
    println!("C°° = C: {}", dual.dual() == wedge);
    println!(
        "σ(C) = {:.6}, Γ(C) = {:.6}",
        solid_angle(&wedge)?.value,
        outer_angle(&wedge)?.value
    );

    let half = PolyhedralCone::from_hrep(3, &[v(&[0, 0, -1])], &[])?;
    println!(
        "halfspace z ≥ 0: lineality dimension {}, dual is a ray: {}",
        half.lineality_dim(),
        half.dual().dim() == 1
    );

    let octant = PolyhedralCone::orthant(3);
    for f in octant.faces() {
        println!(
            "  face of dim {}: Γ = {:.4}",
            f.dim(),
            outer_angle(&f)?.value
        );
    }
    Ok(())
}
