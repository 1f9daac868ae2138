//! Hand-derived and externally computed reference values.

mod common;

use common::*;
use polycurv::analysis::{candidate_points, euler_characteristic, euler_characteristic_complex};
use polycurv::complexes::{
    combinatorial_curvature_c, complex_curvature_g, conic_gamma_sum, local_euler_sum,
    sommerville_check,
};
use polycurv::polytope::simplex_volume;
use polycurv::valuation::{dual_valuation, extend_to_union};
use polycurv::{
    fixtures, hadwiger_curvature, index, rat, solid_angle, tangent_cone, ConeValuation,
    ConvexPolytope, PolyhedralCone, RatVector, Rational,
};

const EPS: f64 = 1e-12;

// Solid angles of triangular and square cones in R³ from the Van Oosterom-Strackee
// formula, evaluated at 30 digits with mpmath.
#[test]
fn solid_angles_match_closed_formula() {
    let cases: [(&[&[i64]], f64); 4] = [
        (
            &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1]],
            1.0 / 24.0,
        ),
        (
            &[&[1, 2, 3], &[-1, 1, 2], &[2, -1, 1]],
            0.036_201_190_208_843_14,
        ),
        (&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 0.125),
        (
            &[&[1, 1, 1], &[1, -1, 1], &[-1, -1, 1], &[-1, 1, 1]],
            1.0 / 6.0,
        ),
    ];
    for (gens, expected) in cases {
        let rays: Vec<RatVector> = gens.iter().map(|g| v(g)).collect();
        let c = PolyhedralCone::from_generators(3, &rays, &[]).unwrap();
        let got = solid_angle(&c).unwrap().value;
        assert!(
            (got - expected).abs() < EPS,
            "{gens:?}: {got} vs {expected}"
        );
    }
    let wedge = PolyhedralCone::from_generators(2, &[v(&[1, 0]), v(&[1, 2])], &[]).unwrap();
    assert!((solid_angle(&wedge).unwrap().value - 0.176_208_191_174_783_4).abs() < EPS);
}

// Volume and vertex count of a 3D hull from scipy's Qhull.
#[test]
fn hull_volume_matches_qhull() {
    let pts: Vec<RatVector> = [
        [0, 0, 0],
        [3, 0, 0],
        [0, 2, 0],
        [0, 0, 4],
        [1, 1, 1],
        [2, 2, 2],
        [3, 3, 0],
        [1, 0, 3],
        [-1, 1, 1],
    ]
    .iter()
    .map(|p| v(p))
    .collect();
    let p = ConvexPolytope::hull(&pts).unwrap();
    assert_eq!(p.vertices().len(), 8);
    assert!(!p.vertices().contains(&v(&[1, 1, 1])));
    let vol: Rational = p
        .triangulate()
        .unwrap()
        .iter()
        .map(|s| simplex_volume(s.vertices()).unwrap())
        .sum();
    assert_eq!(vol, rat(40, 3));
}

// Area of a fixed non-convex hexagon from shapely.
#[test]
fn polygon_area_matches_shapely() {
    let poly: Vec<RatVector> = [[0, 0], [4, 0], [5, 3], [2, 1], [1, 4], [-1, 2]]
        .iter()
        .map(|p| v(p))
        .collect();
    assert_eq!(shoelace(&poly), rat(12, 1));
    for start in 0..poly.len() {
        let area: Rational = ear_clipping(&poly, start)
            .iter()
            .map(|t| simplex_volume(t).unwrap())
            .sum();
        assert_eq!(area, rat(12, 1));
    }
}

#[test]
fn l_shape_by_hand() {
    let l = fixtures::l_shape();
    let tan = tangent_cone(&l, &v(&[1, 1])).unwrap();
    // Both pieces have halfplane tangent cones whose duals are rays; their
    // intersection is a quadrant with outer angle 1/4: 0 + 0 − 1/4.
    let value = extend_to_union(&dual_valuation(&ConeValuation::uniform()), &tan).unwrap();
    assert!((value.value + 0.25).abs() < EPS);
    let c = candidate_points(&l).unwrap();
    assert_eq!(c.len(), 8);
    let expected = [
        (0, 0, 0.25),
        (2, 0, 0.25),
        (2, 1, 0.25),
        (1, 2, 0.25),
        (0, 2, 0.25),
        (1, 1, -0.25),
        (1, 0, 0.0),
        (0, 1, 0.0),
    ];
    for (x, y, k) in expected {
        assert!((hadwiger_curvature(&l, &v(&[x, y])).unwrap().value - k).abs() < EPS);
    }
}

#[test]
fn annulus_by_hand() {
    let a = fixtures::square_annulus();
    // 4 boxes, 4 corner overlaps, no triple overlaps.
    assert_eq!(euler_characteristic(&a).unwrap(), 0);
    for (x, y) in [(0, 0), (3, 0), (0, 3), (3, 3)] {
        assert!((hadwiger_curvature(&a, &v(&[x, y])).unwrap().value - 0.25).abs() < EPS);
    }
    for (x, y) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        assert!((hadwiger_curvature(&a, &v(&[x, y])).unwrap().value + 0.25).abs() < EPS);
    }
    // Height x + 2y: maximum at (3,3), a saddle at the hole's lower-left corner.
    let xi = v(&[1, 2]);
    assert_eq!(index(&a, &v(&[3, 3]), &xi).unwrap().value, 1.0);
    assert_eq!(index(&a, &v(&[1, 1]), &xi).unwrap().value, -1.0);
    assert_eq!(index(&a, &v(&[2, 2]), &xi).unwrap().value, 0.0);
}

#[test]
fn square_complex_by_hand() {
    let z = fixtures::square_complex();
    // corner: vertex Γ = 1, two edges Γ = 1/2, square Γ = 1/4
    assert!((complex_curvature_g(&z, &v(&[0, 0])).unwrap().value - 0.25).abs() < EPS);
    let mid = RatVector::new(vec![rat(1, 2), rat(0, 1)]);
    assert!(complex_curvature_g(&z, &mid).unwrap().value.abs() < EPS);
    assert_eq!(combinatorial_curvature_c(&z, &v(&[0, 0])), rat(1, 4));
    let total: Rational = z
        .vertices()
        .iter()
        .map(|x| combinatorial_curvature_c(&z, x))
        .sum();
    assert_eq!(total, rat(1, 1));
}

#[test]
fn triangulation_dependence_counterexample() {
    let o = v(&[0, 0]);
    let a = fixtures::square_main_diagonal();
    let b = fixtures::square_anti_diagonal();
    // main diagonal: 1 − 3/2 + 2/3; anti-diagonal: 1 − 1 + 1/3
    assert_eq!(combinatorial_curvature_c(&a, &o), rat(1, 6));
    assert_eq!(combinatorial_curvature_c(&b, &o), rat(1, 3));
    let ga = complex_curvature_g(&a, &o).unwrap().value;
    let gb = complex_curvature_g(&b, &o).unwrap().value;
    assert!((ga - 0.25).abs() < EPS && (gb - 0.25).abs() < EPS);
}

#[test]
fn triangle_boundary_by_hand() {
    let z = fixtures::triangle_boundary();
    assert_eq!(euler_characteristic_complex(&z), 0);
    for x in z.vertices() {
        assert_eq!(combinatorial_curvature_c(&z, &x), rat(0, 1));
    }
}

#[test]
fn cone_identities_by_hand() {
    // 1 − 4·(1/2) + 4·(1/4) = 0 = Γ(R²)
    let fan = conic_gamma_sum(&fixtures::quadrant_fan(), 1e-9).unwrap();
    assert!(fan.lhs.value.abs() < EPS && fan.rhs.value.abs() < EPS);
    // 1 − 3/2 + 3/4 − 1/8 = 1/8
    let s = sommerville_check(&PolyhedralCone::orthant(3), 1e-9).unwrap();
    assert!((s.lhs.value - 0.125).abs() < EPS && (s.rhs.value - 0.125).abs() < EPS);
    let sq = ConvexPolytope::axis_box(&v(&[0, 0]), &v(&[1, 1])).unwrap();
    assert_eq!(local_euler_sum(&sq, &sq.faces(0)[0]).unwrap(), 0);
}

#[test]
fn symmetric_fixtures() {
    for x in fixtures::unit_cube().pieces()[0].vertices() {
        assert!((hadwiger_curvature(&fixtures::unit_cube(), x).unwrap().value - 0.125).abs() < EPS);
    }
    let t = fixtures::regular_tetrahedron();
    for x in t.pieces()[0].vertices() {
        assert!((hadwiger_curvature(&t, x).unwrap().value - 0.25).abs() < EPS);
    }
}
