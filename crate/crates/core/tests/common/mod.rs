#![allow(dead_code)]

use num_traits::{Signed, Zero};
use polycurv::{rat, CellComplex, ConvexPolytope, PolyhedralCone, Polyhedron, RatVector, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn v(c: &[i64]) -> RatVector {
    RatVector::from_ints(c)
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_rational(r: &mut StdRng, lo: i64, hi: i64, max_den: i64) -> Rational {
    let d = r.random_range(1..=max_den);
    rat(r.random_range(lo * d..=hi * d), d)
}

pub fn random_points(r: &mut StdRng, n: usize, dim: usize) -> Vec<RatVector> {
    (0..n)
        .map(|_| RatVector::new((0..dim).map(|_| random_rational(r, -5, 5, 4)).collect()))
        .collect()
}

/// Up to `max_boxes` full-dimensional boxes with integer corners in `[0, 4]^dim`.
pub fn random_box_union(r: &mut StdRng, dim: usize, max_boxes: usize) -> Polyhedron {
    let k = r.random_range(1..=max_boxes);
    let pieces = (0..k)
        .map(|_| {
            let mut lo = Vec::new();
            let mut hi = Vec::new();
            for _ in 0..dim {
                let a = r.random_range(0..4);
                lo.push(a);
                hi.push(r.random_range(a + 1..=4));
            }
            ConvexPolytope::axis_box(&v(&lo), &v(&hi)).unwrap()
        })
        .collect();
    Polyhedron::new(dim, pieces).unwrap()
}

fn cross(o: &RatVector, a: &RatVector, b: &RatVector) -> Rational {
    let (ax, ay) = (&a[0] - &o[0], &a[1] - &o[1]);
    let (bx, by) = (&b[0] - &o[0], &b[1] - &o[1]);
    ax * by - ay * bx
}

/// Simple polygon, counterclockwise, star-shaped around the origin (which lies
/// strictly inside), with no three consecutive vertices collinear.
pub fn random_star_polygon(r: &mut StdRng, n: usize) -> Vec<RatVector> {
    let o = RatVector::zeros(2);
    loop {
        let mut pts: Vec<(f64, RatVector)> = (0..n)
            .map(|_| {
                let p = v(&[r.random_range(-9..=9), r.random_range(-9..=9)]);
                let a = rat_f(&p[1]).atan2(rat_f(&p[0]));
                (a, p)
            })
            .filter(|(_, p)| !p.is_zero())
            .collect();
        pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let poly: Vec<RatVector> = pts.into_iter().map(|(_, p)| p).collect();
        let m = poly.len();
        if m < 3 {
            continue;
        }
        let ok = (0..m).all(|i| {
            let (a, b, c) = (&poly[i], &poly[(i + 1) % m], &poly[(i + 2) % m]);
            cross(&o, a, b).is_positive() && !cross(a, b, c).is_zero()
        });
        if ok {
            return poly;
        }
    }
}

fn rat_f(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap()
}

fn in_closed_triangle(p: &RatVector, a: &RatVector, b: &RatVector, c: &RatVector) -> bool {
    !cross(a, b, p).is_negative() && !cross(b, c, p).is_negative() && !cross(c, a, p).is_negative()
}

/// Ear clipping of a counterclockwise simple polygon, starting the search at `start`.
pub fn ear_clipping(poly: &[RatVector], start: usize) -> Vec<[RatVector; 3]> {
    let mut idx: Vec<usize> = (0..poly.len()).collect();
    idx.rotate_left(start % poly.len());
    let mut out = Vec::new();
    while idx.len() > 3 {
        let m = idx.len();
        let ear = (0..m)
            .find(|&i| {
                let (a, b, c) = (
                    &poly[idx[(i + m - 1) % m]],
                    &poly[idx[i]],
                    &poly[idx[(i + 1) % m]],
                );
                cross(a, b, c).is_positive()
                    && idx.iter().all(|&j| {
                        let p = &poly[j];
                        p == a || p == b || p == c || !in_closed_triangle(p, a, b, c)
                    })
            })
            .expect("a simple polygon has an ear");
        out.push([
            poly[idx[(ear + m - 1) % m]].clone(),
            poly[idx[ear]].clone(),
            poly[idx[(ear + 1) % m]].clone(),
        ]);
        idx.remove(ear);
    }
    out.push([
        poly[idx[0]].clone(),
        poly[idx[1]].clone(),
        poly[idx[2]].clone(),
    ]);
    out
}

/// Triangles from the origin to every edge of a polygon star-shaped around it.
pub fn fan_from_origin(poly: &[RatVector]) -> Vec<[RatVector; 3]> {
    let m = poly.len();
    (0..m)
        .map(|i| {
            [
                RatVector::zeros(2),
                poly[i].clone(),
                poly[(i + 1) % m].clone(),
            ]
        })
        .collect()
}

pub fn complex_of(triangles: &[[RatVector; 3]]) -> CellComplex {
    let cells: Vec<ConvexPolytope> = triangles
        .iter()
        .map(|t| ConvexPolytope::hull(t).unwrap())
        .collect();
    CellComplex::from_top_cells(&cells).unwrap()
}

pub fn shoelace(poly: &[RatVector]) -> Rational {
    let m = poly.len();
    let twice: Rational = (0..m)
        .map(|i| cross(&RatVector::zeros(2), &poly[i], &poly[(i + 1) % m]))
        .sum();
    twice / rat(2, 1)
}

/// Cone from 1 to 4 random integer generators, sometimes with a lineality direction.
pub fn random_cone(r: &mut StdRng, dim: usize) -> PolyhedralCone {
    let vec = |r: &mut StdRng| loop {
        let c: Vec<i64> = (0..dim).map(|_| r.random_range(-3..=3)).collect();
        if c.iter().any(|&x| x != 0) {
            return v(&c);
        }
    };
    let k = r.random_range(1..=4);
    let rays: Vec<RatVector> = (0..k).map(|_| vec(r)).collect();
    let lineality: Vec<RatVector> = if r.random_bool(0.2) {
        vec![vec(r)]
    } else {
        vec![]
    };
    PolyhedralCone::from_generators(dim, &rays, &lineality).unwrap()
}
