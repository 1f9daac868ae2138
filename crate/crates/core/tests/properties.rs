mod common;

use common::*;
use num_traits::{Signed, Zero};
use polycurv::analysis::{euler_characteristic, euler_characteristic_complex};
use polycurv::angle::{solid_angle_with, SphereSampler};
use polycurv::complexes::local_euler_check;
use polycurv::linalg::{lp_feasible, Constraint, RatMatrix, Relation};
use polycurv::polytope::simplex_volume;
use polycurv::{
    gauss_bonnet_report, hadwiger_curvature, index, is_geometric_vertex, rat, solid_angle,
    tangent_cone, ConeValuation, ConvexPolytope, MonteCarloConfig, PolyhedralCone, Polyhedron,
    RatVector, Rational,
};
use proptest::prelude::*;
use rand::Rng;

const TOL: f64 = 1e-9;

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn kappa(p: &Polyhedron, x: &RatVector) -> f64 {
    hadwiger_curvature(p, x).unwrap().value
}

fn random_hull(seed: u64, dim: usize, n: usize) -> ConvexPolytope {
    let mut r = rng(seed);
    loop {
        let pts = random_points(&mut r, n, dim);
        let p = ConvexPolytope::hull(&pts).unwrap();
        if p.dim() == dim {
            return p;
        }
    }
}

fn random_box(r: &mut rand::rngs::StdRng, dim: usize) -> ConvexPolytope {
    let (mut lo, mut hi) = (Vec::new(), Vec::new());
    for _ in 0..dim {
        let a = r.random_range(0..4);
        lo.push(a);
        hi.push(r.random_range(a + 1..=4));
    }
    ConvexPolytope::axis_box(&v(&lo), &v(&hi)).unwrap()
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn rank_is_transpose_invariant(seed: u64, rows in 1usize..5, cols in 1usize..5) {
        let mut r = rng(seed);
        let m = RatMatrix::from_rows(
            (0..rows).map(|_| RatVector::new((0..cols).map(|_| random_rational(&mut r, -2, 2, 2)).collect())).collect(),
        ).unwrap();
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert!(m.rank() <= rows.min(cols));
    }

    #[test]
    fn lp_witness_satisfies_every_constraint(seed: u64, dim in 1usize..4, k in 1usize..7) {
        let mut r = rng(seed);
        let anchor = random_points(&mut r, 1, dim).remove(0);
        let mut cons = Vec::new();
        for _ in 0..k {
            let a = random_points(&mut r, 1, dim).remove(0);
            let slack = random_rational(&mut r, 0, 2, 3);
            let rel = match r.random_range(0..3) { 0 => Relation::Eq, 1 => Relation::Lt, _ => Relation::Le };
            let rhs = match rel {
                Relation::Eq => a.dot(&anchor),
                Relation::Lt => a.dot(&anchor) + slack + rat(1, 5),
                Relation::Le => a.dot(&anchor) + slack,
            };
            cons.push(Constraint::new(a, rhs, rel));
        }
        let w = lp_feasible(&cons).unwrap();
        prop_assert!(w.is_some(), "anchor is feasible");
        let w = w.unwrap();
        prop_assert!(cons.iter().all(|c| c.is_satisfied_by(&w)));
        // x ≤ −1 and x ≥ 1 in the first coordinate
        let e = RatVector::unit(dim, 0);
        let bad = [Constraint::new(e.clone(), rat(-1, 1), Relation::Le), Constraint::new(e.neg(), rat(-1, 1), Relation::Le)];
        prop_assert!(lp_feasible(&bad).unwrap().is_none());
    }

    #[test]
    fn hull_round_trips_through_halfspaces(seed: u64, dim in 2usize..4) {
        let p = random_hull(seed, dim, 8);
        let (hs, eqs) = p.v_to_h();
        let q = ConvexPolytope::from_hrep(dim, &hs, &eqs).unwrap().unwrap();
        prop_assert_eq!(p.vertices(), q.vertices());
    }

    #[test]
    fn euler_poincare(seed: u64, dim in 1usize..4) {
        let p = random_hull(seed, dim, 9);
        let s: i64 = p.all_faces().iter().map(|f| if f.dim % 2 == 0 { 1 } else { -1 }).sum();
        prop_assert_eq!(s, 1);
    }

    #[test]
    fn intersection_is_commutative_and_associative(seed: u64, dim in 2usize..4) {
        let mut r = rng(seed);
        let a = random_box(&mut r, dim);
        let b = ConvexPolytope::hull(&random_points(&mut r, 6, dim).iter().map(|p| p.scale(&rat(1, 2)).add(&v(&vec![2; dim]))).collect::<Vec<_>>()).unwrap();
        let c = random_box(&mut r, dim);
        let verts = |p: Option<ConvexPolytope>| p.map(|p| p.vertices().to_vec());
        prop_assert_eq!(verts(a.intersect(&b).unwrap()), verts(b.intersect(&a).unwrap()));
        let left = a.intersect(&b).unwrap().and_then(|ab| ab.intersect(&c).unwrap());
        let right = b.intersect(&c).unwrap().and_then(|bc| a.intersect(&bc).unwrap());
        prop_assert_eq!(verts(left), verts(right));
    }

    #[test]
    fn triangulations_preserve_area(seed: u64, n in 3usize..9) {
        let poly = random_star_polygon(&mut rng(seed), n);
        let area = shoelace(&poly);
        let ears: Rational = ear_clipping(&poly, 0).iter().map(|t| simplex_volume(t).unwrap()).sum();
        let fan: Rational = fan_from_origin(&poly).iter().map(|t| simplex_volume(t).unwrap()).sum();
        prop_assert_eq!(&ears, &area);
        prop_assert_eq!(&fan, &area);
        let hull = ConvexPolytope::hull(&poly).unwrap();
        let pieces: Rational = hull.triangulate().unwrap().iter().map(|s| simplex_volume(s.vertices()).unwrap()).sum();
        prop_assert!(pieces >= area);
    }

    #[test]
    fn double_dual_is_identity(seed: u64, dim in 1usize..5) {
        let c = random_cone(&mut rng(seed), dim);
        prop_assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn lower_dimensional_cones_have_dual_lineality(seed: u64, dim in 1usize..5) {
        let c = random_cone(&mut rng(seed), dim);
        prop_assert_eq!(c.dual().lineality_dim(), dim - c.dim());
        if c.dim() < dim {
            prop_assert!(c.dual().lineality_dim() > 0);
        }
    }

    #[test]
    fn splitting_a_cone_by_a_hyperplane_is_additive(seed: u64, dim in 2usize..4) {
        let mut r = rng(seed);
        let c = random_cone(&mut r, dim);
        let a = random_points(&mut r, 1, dim).remove(0);
        prop_assume!(!a.is_zero());
        let whole = solid_angle(&c).unwrap().value;
        let plus = solid_angle(&c.intersect_halfspace(&a)).unwrap().value;
        let minus = solid_angle(&c.intersect_halfspace(&a.neg())).unwrap().value;
        prop_assert!((plus + minus - whole).abs() < TOL, "{} + {} vs {}", plus, minus, whole);
    }

    #[test]
    fn planar_wedges_are_complementary(seed: u64) {
        let mut r = rng(seed);
        let u = random_points(&mut r, 1, 2).remove(0);
        let w = random_points(&mut r, 1, 2).remove(0);
        let det = &u[0] * &w[1] - &u[1] * &w[0];
        prop_assume!(!det.is_zero());
        // the two sides of the lines through u and w
        let a = PolyhedralCone::from_generators(2, &[u.clone(), w.clone()], &[]).unwrap();
        let b = PolyhedralCone::from_generators(2, &[u.neg(), w.neg()], &[]).unwrap();
        let c = PolyhedralCone::from_generators(2, &[u.clone(), w.neg()], &[]).unwrap();
        let d = PolyhedralCone::from_generators(2, &[u.neg(), w.clone()], &[]).unwrap();
        let s = |k: &PolyhedralCone| solid_angle(k).unwrap().value;
        prop_assert!((s(&a) + s(&c) - 0.5).abs() < TOL);
        prop_assert!((s(&a) + s(&b) + s(&c) + s(&d) - 1.0).abs() < TOL);
        prop_assert!((s(&a) - s(&b)).abs() < TOL);
    }

    #[test]
    fn orthants_tile_space(dim in 1usize..4, mask in 0u32..8) {
        let signs: Vec<i64> = (0..dim).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let gens: Vec<RatVector> = (0..dim).map(|i| RatVector::unit(dim, i).scale(&rat(signs[i], 1))).collect();
        let o = PolyhedralCone::from_generators(dim, &gens, &[]).unwrap();
        let value = solid_angle(&o).unwrap().value;
        prop_assert!((value * (1u64 << dim) as f64 - 1.0).abs() < TOL);
    }

    #[test]
    fn monte_carlo_is_deterministic(seed: u64, cone_seed: u64) {
        let mut gens = random_cone(&mut rng(cone_seed), 4).rays();
        gens.push(RatVector::unit(4, 0));
        let c = PolyhedralCone::from_generators(4, &gens, &[]).unwrap();
        let mc = MonteCarloConfig::new(4000, seed, 0.99);
        let a = solid_angle_with(&c, &mc).unwrap();
        let b = solid_angle_with(&c, &mc).unwrap();
        prop_assert_eq!(a.value.to_bits(), b.value.to_bits());
        let s = SphereSampler::new(5, seed);
        prop_assert_eq!(s.sample(17), s.sample(17));
    }
}

proptest! {
    #![proptest_config(cfg(24))]

    #[test]
    fn tangent_cone_is_local(seed: u64, dim in 2usize..4) {
        let mut r = rng(seed);
        let p = random_box_union(&mut r, dim, 3);
        let q = p.pieces()[0].clone();
        let x = q.vertices()[r.random_range(0..q.vertices().len())].clone();
        let eps = rat(1, 4);
        let lo = RatVector::new(x.coords().iter().map(|c| c - &eps).collect());
        let hi = RatVector::new(x.coords().iter().map(|c| c + &eps).collect());
        let b = ConvexPolytope::axis_box(&lo, &hi).unwrap();
        let cut: Vec<ConvexPolytope> = p.pieces().iter().filter_map(|q| q.intersect(&b).unwrap()).collect();
        let local = Polyhedron::new(dim, cut).unwrap();
        let full = tangent_cone(&p, &x).unwrap();
        let near = tangent_cone(&local, &x).unwrap();
        prop_assert_eq!(full.pieces().len(), near.pieces().len());
        for (a, b) in full.pieces().iter().zip(near.pieces()) {
            prop_assert_eq!(a, b);
        }
        prop_assert!((kappa(&p, &x) - kappa(&local, &x)).abs() < TOL);
    }

    #[test]
    fn curvature_is_weakly_additive(seed: u64, dim in 2usize..4) {
        let mut r = rng(seed);
        let a = random_box(&mut r, dim);
        let b = random_box(&mut r, dim);
        let union = Polyhedron::new(dim, vec![a.clone(), b.clone()]).unwrap();
        let pa = Polyhedron::from_convex(a.clone());
        let pb = Polyhedron::from_convex(b.clone());
        let meet = match a.intersect(&b).unwrap() {
            Some(m) => Polyhedron::from_convex(m),
            None => Polyhedron::empty(dim),
        };
        let mut points: Vec<RatVector> = a.vertices().iter().chain(b.vertices()).cloned().collect();
        points.extend(meet.pieces().iter().flat_map(|m| m.vertices().to_vec()));
        for x in points {
            let lhs = kappa(&union, &x) + kappa(&meet, &x);
            let rhs = kappa(&pa, &x) + kappa(&pb, &x);
            prop_assert!((lhs - rhs).abs() < TOL);
        }
    }

    #[test]
    fn curvature_ignores_the_representation(seed: u64, dim in 2usize..4) {
        let mut r = rng(seed);
        let p = random_box_union(&mut r, dim, 3);
        // split the first box along its first coordinate where possible
        let first = &p.pieces()[0];
        let lo = first.vertices()[0].clone();
        let hi = first.vertices().last().unwrap().clone();
        let mid = (&lo[0] + &hi[0]) / rat(2, 1);
        let mut hi_left = hi.clone().into_inner();
        hi_left[0] = mid.clone();
        let mut lo_right = lo.clone().into_inner();
        lo_right[0] = mid;
        let mut pieces = vec![
            ConvexPolytope::axis_box(&lo, &RatVector::new(hi_left)).unwrap(),
            ConvexPolytope::axis_box(&RatVector::new(lo_right), &hi).unwrap(),
        ];
        pieces.extend(p.pieces()[1..].iter().cloned());
        let split = Polyhedron::new(dim, pieces).unwrap();
        let mut points: Vec<RatVector> = split.pieces().iter().flat_map(|q| q.vertices().to_vec()).collect();
        points.sort();
        points.dedup();
        for x in points {
            prop_assert!((kappa(&p, &x) - kappa(&split, &x)).abs() < TOL);
        }
    }

    #[test]
    fn curvature_is_translation_invariant(seed: u64, dim in 2usize..4) {
        let mut r = rng(seed);
        let p = random_box_union(&mut r, dim, 3);
        let t = random_points(&mut r, 1, dim).remove(0);
        let moved = p.translate(&t).unwrap();
        for q in p.pieces() {
            for x in q.vertices() {
                prop_assert!((kappa(&p, x) - kappa(&moved, &x.add(&t))).abs() < TOL);
            }
        }
    }

    #[test]
    fn curvature_vanishes_off_geometric_vertices(seed: u64, dim in 2usize..4) {
        let mut r = rng(seed);
        let p = random_box_union(&mut r, dim, 3);
        let q = &p.pieces()[r.random_range(0..p.pieces().len())];
        let a = &q.vertices()[0];
        let b = &q.vertices()[r.random_range(1..q.vertices().len())];
        let x = a.add(b).scale(&rat(1, 2));
        if !is_geometric_vertex(&p, &x).unwrap() {
            prop_assert!(kappa(&p, &x).abs() < TOL);
        }
        let outside = v(&vec![9; dim]);
        prop_assert_eq!(kappa(&p, &outside), 0.0);
    }

    #[test]
    fn index_marks_the_maximizer_of_a_convex_polytope(seed: u64, dim in 2usize..4) {
        let p = random_hull(seed, dim, 8);
        let mut r = rng(seed ^ 0x5eed);
        let xi = RatVector::new((0..dim).map(|_| random_rational(&mut r, -3, 3, 7)).collect());
        let best = p.vertices().iter().map(|x| xi.dot(x)).max().unwrap();
        prop_assume!(p.vertices().iter().filter(|x| xi.dot(x) == best).count() == 1);
        let poly = Polyhedron::from_convex(p.clone());
        for x in p.vertices() {
            let expected = if xi.dot(x) == best { 1.0 } else { 0.0 };
            prop_assert_eq!(index(&poly, x, &xi).unwrap().value, expected);
        }
    }

    #[test]
    fn inclusion_exclusion_matches_complex_euler_characteristic(seed: u64, n in 3usize..8) {
        let poly = random_star_polygon(&mut rng(seed), n);
        let tris = ear_clipping(&poly, 0);
        let z = complex_of(&tris);
        let p = Polyhedron::from_vertex_lists(2, &tris.iter().map(|t| t.to_vec()).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(euler_characteristic_complex(&z), 1);
        prop_assert_eq!(euler_characteristic(&p).unwrap(), 1);
    }

    #[test]
    fn gauss_bonnet_on_hulls(seed: u64, dim in 2usize..4) {
        let p = Polyhedron::from_convex(random_hull(seed, dim, 10));
        let report = gauss_bonnet_report(&p, &ConeValuation::uniform(), 1e-8).unwrap();
        prop_assert!(report.pass);
        prop_assert!((report.curvature_sum.value - 1.0).abs() < 1e-8);
    }

    #[test]
    fn gauss_bonnet_on_box_unions(seed: u64, dim in 2usize..4) {
        let p = random_box_union(&mut rng(seed), dim, 4);
        let report = gauss_bonnet_report(&p, &ConeValuation::uniform(), 1e-8).unwrap();
        prop_assert!(report.pass);
        prop_assert!((report.curvature_sum.value - report.euler_characteristic as f64).abs() < 1e-8);
    }

    #[test]
    fn local_euler_relation_on_hulls(seed: u64, dim in 2usize..4) {
        let p = random_hull(seed, dim, 8);
        for f in p.all_faces().iter().filter(|f| f.dim < dim) {
            prop_assert!(local_euler_check(&p, f).unwrap());
        }
    }
}

#[test]
fn star_polygons_are_simple() {
    let mut r = rng(3);
    for _ in 0..50 {
        let poly = random_star_polygon(&mut r, 7);
        assert!(shoelace(&poly).is_positive());
    }
}
