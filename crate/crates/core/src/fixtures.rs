//! Small named polyhedra and complexes with known curvatures.

use crate::complexes::{validate_conic, CellComplex, ConicComplex};
use crate::cone::PolyhedralCone;
use crate::linalg::RatVector;
use crate::polyhedron::Polyhedron;
use crate::polytope::ConvexPolytope;

fn v(c: &[i64]) -> RatVector {
    RatVector::from_ints(c)
}

fn hull(points: &[&[i64]]) -> ConvexPolytope {
    ConvexPolytope::hull(&points.iter().map(|p| v(p)).collect::<Vec<_>>()).expect("fixture hull")
}

fn boxed(lo: &[i64], hi: &[i64]) -> ConvexPolytope {
    ConvexPolytope::axis_box(&v(lo), &v(hi)).expect("fixture box")
}

fn union(ambient: usize, pieces: Vec<ConvexPolytope>) -> Polyhedron {
    Polyhedron::new(ambient, pieces).expect("fixture pieces share a dimension")
}

/// `[0,1]²`; curvature 1/4 at each corner.
pub fn unit_square() -> Polyhedron {
    Polyhedron::from_convex(boxed(&[0, 0], &[1, 1]))
}

/// `[0,1]³`; curvature 1/8 at each corner.
pub fn unit_cube() -> Polyhedron {
    Polyhedron::from_convex(boxed(&[0, 0, 0], &[1, 1, 1]))
}

/// `[0,1]ⁿ`; curvature `2⁻ⁿ` at each corner.
pub fn hypercube(n: usize) -> Polyhedron {
    Polyhedron::from_convex(boxed(&vec![0; n], &vec![1; n]))
}

/// Regular tetrahedron on alternate corners of `[-1,1]³`; curvature 1/4 at each vertex.
pub fn regular_tetrahedron() -> Polyhedron {
    Polyhedron::from_convex(hull(&[
        &[1, 1, 1],
        &[1, -1, -1],
        &[-1, 1, -1],
        &[-1, -1, 1],
    ]))
}

/// `([0,2]×[0,1]) ∪ ([0,1]×[0,2])`; curvature −1/4 at the reflex corner `(1,1)`.
pub fn l_shape() -> Polyhedron {
    union(2, vec![boxed(&[0, 0], &[2, 1]), boxed(&[0, 0], &[1, 2])])
}

/// `[0,3]²` minus the open square `(1,2)²`, as four overlapping boxes; `χ = 0`.
pub fn square_annulus() -> Polyhedron {
    union(
        2,
        vec![
            boxed(&[0, 0], &[3, 1]),
            boxed(&[0, 2], &[3, 3]),
            boxed(&[0, 0], &[1, 3]),
            boxed(&[2, 0], &[3, 3]),
        ],
    )
}

pub fn two_disjoint_squares() -> Polyhedron {
    union(2, vec![boxed(&[0, 0], &[1, 1]), boxed(&[2, 0], &[3, 1])])
}

pub fn two_disjoint_triangles() -> Polyhedron {
    union(
        2,
        vec![
            hull(&[&[0, 0], &[1, 0], &[0, 1]]),
            hull(&[&[3, 0], &[4, 0], &[3, 1]]),
        ],
    )
}

/// The unit square as two triangles.
pub fn unit_square_as_triangles() -> Polyhedron {
    union(
        2,
        vec![
            hull(&[&[0, 0], &[1, 0], &[1, 1]]),
            hull(&[&[0, 0], &[0, 1], &[1, 1]]),
        ],
    )
}

/// The unit square as four quarter squares.
pub fn unit_square_as_quarters() -> Polyhedron {
    let half = |c: &[i64]| RatVector::new(c.iter().map(|&k| crate::linalg::rat(k, 2)).collect());
    let quarter = |x: i64, y: i64| {
        ConvexPolytope::axis_box(&half(&[x, y]), &half(&[x + 1, y + 1])).expect("fixture box")
    };
    union(
        2,
        vec![quarter(0, 0), quarter(1, 0), quarter(0, 1), quarter(1, 1)],
    )
}

/// Unit square with its 4 vertices, 4 edges and the square itself.
pub fn square_complex() -> CellComplex {
    CellComplex::from_top_cells(&[boxed(&[0, 0], &[1, 1])]).expect("valid complex")
}

/// Unit square cut along the diagonal through `(0,0)` and `(1,1)`.
pub fn square_main_diagonal() -> CellComplex {
    CellComplex::from_top_cells(&[
        hull(&[&[0, 0], &[1, 0], &[1, 1]]),
        hull(&[&[0, 0], &[0, 1], &[1, 1]]),
    ])
    .expect("valid complex")
}

/// Unit square cut along the diagonal through `(1,0)` and `(0,1)`.
pub fn square_anti_diagonal() -> CellComplex {
    CellComplex::from_top_cells(&[
        hull(&[&[0, 0], &[1, 0], &[0, 1]]),
        hull(&[&[1, 0], &[0, 1], &[1, 1]]),
    ])
    .expect("valid complex")
}

/// Triangulated L-shape: six triangles over the unit grid.
pub fn l_shape_complex() -> CellComplex {
    let tris: Vec<ConvexPolytope> = [
        [[0, 0], [1, 0], [1, 1]],
        [[0, 0], [0, 1], [1, 1]],
        [[1, 0], [2, 0], [2, 1]],
        [[1, 0], [1, 1], [2, 1]],
        [[0, 1], [1, 1], [1, 2]],
        [[0, 1], [0, 2], [1, 2]],
    ]
    .iter()
    .map(|t| hull(&[&t[0], &t[1], &t[2]]))
    .collect();
    CellComplex::from_top_cells(&tris).expect("valid complex")
}

/// The three edges and three vertices of a triangle; `χ = 0`.
pub fn triangle_boundary() -> CellComplex {
    CellComplex::from_top_cells(&[
        hull(&[&[0, 0], &[1, 0]]),
        hull(&[&[1, 0], &[0, 1]]),
        hull(&[&[0, 1], &[0, 0]]),
    ])
    .expect("valid complex")
}

/// The four closed quadrants of `R²` with their rays and the origin.
pub fn quadrant_fan() -> ConicComplex {
    let mut cones = Vec::new();
    for (sx, sy) in [(1, 1), (-1, 1), (-1, -1), (1, -1)] {
        let q = PolyhedralCone::from_generators(2, &[v(&[sx, 0]), v(&[0, sy])], &[])
            .expect("fixture cone");
        cones.extend(q.faces());
    }
    validate_conic(cones).expect("valid fan")
}
