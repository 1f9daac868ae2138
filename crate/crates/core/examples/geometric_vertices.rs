//! Points whose tangent cone is a union of parallel lines carry no curvature.

use polycurv::{
    fixtures, hadwiger_curvature, is_geometric_vertex, rat, tangent_cone, ConvexPolytope,
    Polyhedron, RatVector,
};

fn main() -> polycurv::Result<()> {
    let square = fixtures::unit_square();
    let edge_mid = RatVector::new(vec![rat(1, 2), rat(0, 1)]);
    for x in [RatVector::from_ints(&[0, 0]), edge_mid] {
        println!(
            "square at {x}: vertex = {}, κ = {}",
            is_geometric_vertex(&square, &x)?,
            hadwiger_curvature(&square, &x)?.value
        );
    }

    // Two quadrants sharing the x-axis: neither contains a line, the union is a halfplane.
    let v = |c: &[i64]| RatVector::from_ints(c);
    let left = ConvexPolytope::axis_box(&v(&[-1, 0]), &v(&[0, 1]))?;
    let right = ConvexPolytope::axis_box(&v(&[0, 0]), &v(&[1, 1]))?;
    let p = Polyhedron::new(2, vec![left, right])?;
    let o = v(&[0, 0]);
    println!(
        "tangent pieces at {o}: {}",
        tangent_cone(&p, &o)?.pieces().len()
    );
    println!(
        "geometric vertex: {}, κ = {}",
        is_geometric_vertex(&p, &o)?,
        hadwiger_curvature(&p, &o)?.value
    );
    Ok(())
}
