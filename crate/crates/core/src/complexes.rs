//! Polyhedral and conic cell complexes and the angle identities they satisfy.

use std::collections::HashSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::angle::{outer_angle_with, MonteCarloConfig};
use crate::cone::{tangent_cone_of_polytope, PolyhedralCone, TangentCone};
use crate::error::{Error, Result};
use crate::linalg::{RatVector, Rational};
use crate::polyhedron::Polyhedron;
use crate::polytope::{ConvexPolytope, Face};
use crate::valuation::{
    dual_valuation, extend_to_union, hadwiger_curvature_with, ConeValuation, Estimate,
};

/// Finite set of polytopes, closed under faces, meeting in common faces.
#[derive(Clone, Debug, PartialEq)]
pub struct CellComplex {
    ambient: usize,
    cells: Vec<ConvexPolytope>,
}

/// Finite set of cones, closed under faces, meeting in common faces.
#[derive(Clone, Debug, PartialEq)]
pub struct ConicComplex {
    ambient: usize,
    cones: Vec<PolyhedralCone>,
}

/// Both sides of an identity and whether they agree.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub lhs: Estimate,
    pub rhs: Estimate,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityCheck {
    fn new(lhs: Estimate, rhs: Estimate, tolerance: f64) -> Self {
        let pass = (lhs.value - rhs.value).abs() <= tolerance + lhs.abs_error + rhs.abs_error;
        IdentityCheck {
            lhs,
            rhs,
            tolerance,
            pass,
        }
    }
}

fn label(p: &ConvexPolytope) -> String {
    let vs: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
    format!("[{}]", vs.join(", "))
}

fn has_face_with_vertices(p: &ConvexPolytope, vertices: &[RatVector]) -> bool {
    p.all_faces().iter().any(|f| f.vertices() == vertices)
}

/// Checks the complex axioms exactly. Repeated cells are merged.
pub fn validate_complex(cells: Vec<ConvexPolytope>) -> Result<CellComplex> {
    let ambient = cells.first().map_or(0, |c| c.ambient_dim());
    let mut unique: Vec<ConvexPolytope> = Vec::new();
    for c in cells {
        if c.ambient_dim() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: c.ambient_dim(),
            });
        }
        if !unique.contains(&c) {
            unique.push(c);
        }
    }
    let present: HashSet<Vec<RatVector>> = unique.iter().map(|c| c.vertices().to_vec()).collect();
    for c in &unique {
        for f in c.all_faces() {
            if !present.contains(&f.vertices()) {
                return Err(Error::MissingFace {
                    cell: label(c),
                    face: label(&f.to_polytope()?),
                });
            }
        }
    }
    for (i, a) in unique.iter().enumerate() {
        for b in &unique[i + 1..] {
            if let Some(meet) = a.intersect(b)? {
                let vs = meet.vertices();
                if !has_face_with_vertices(a, vs) || !has_face_with_vertices(b, vs) {
                    return Err(Error::ImproperIntersection {
                        first: label(a),
                        second: label(b),
                    });
                }
            }
        }
    }
    unique.sort_by(|a, b| (a.dim(), a.vertices()).cmp(&(b.dim(), b.vertices())));
    Ok(CellComplex {
        ambient,
        cells: unique,
    })
}

impl CellComplex {
    /// All simplices of the given top-dimensional triangulations, with faces.
    pub fn from_top_cells(top: &[ConvexPolytope]) -> Result<Self> {
        let mut cells = Vec::new();
        for c in top {
            for f in c.all_faces() {
                cells.push(f.to_polytope()?);
            }
        }
        validate_complex(cells)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Cells ordered by dimension, then by vertex list.
    pub fn cells(&self) -> &[ConvexPolytope] {
        &self.cells
    }

    pub fn vertices(&self) -> Vec<RatVector> {
        self.cells
            .iter()
            .filter(|c| c.dim() == 0)
            .map(|c| c.vertices()[0].clone())
            .collect()
    }

    /// Cells that are not a proper face of another cell.
    pub fn maximal_cells(&self) -> Vec<ConvexPolytope> {
        self.cells
            .iter()
            .filter(|c| {
                !self
                    .cells
                    .iter()
                    .any(|d| d.dim() > c.dim() && has_face_with_vertices(d, c.vertices()))
            })
            .cloned()
            .collect()
    }

    /// `|Z|` as the union of the maximal cells.
    pub fn underlying_set(&self) -> Result<Polyhedron> {
        Polyhedron::new(self.ambient, self.maximal_cells())
    }
}

/// `Σ_k (−1)^k · #k-cells`.
pub fn euler_characteristic_complex(z: &CellComplex) -> i64 {
    z.cells
        .iter()
        .map(|c| if c.dim() % 2 == 0 { 1 } else { -1 })
        .sum()
}

fn sign(dim: usize) -> f64 {
    if dim.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `G(Z, x) = Σ_{Z' ∈ Z} (−1)^{dim Z'} Γ(Tan(Z', x))` over cells containing `x`.
pub fn complex_curvature_g(z: &CellComplex, x: &RatVector) -> Result<Estimate> {
    complex_curvature_g_with(z, x, &MonteCarloConfig::default())
}

pub fn complex_curvature_g_with(
    z: &CellComplex,
    x: &RatVector,
    mc: &MonteCarloConfig,
) -> Result<Estimate> {
    let mut total = Estimate::default();
    for c in z.cells.iter().filter(|c| c.contains(x)) {
        let gamma = outer_angle_with(&tangent_cone_of_polytope(c, x)?, mc)?;
        total.value += sign(c.dim()) * gamma.value;
        total.abs_error += gamma.abs_error;
    }
    Ok(total)
}

/// Compares `G(Z, x)` with the outer-angle curvature of `|Z|` at `x`.
pub fn brin_check(z: &CellComplex, x: &RatVector, tolerance: f64) -> Result<IdentityCheck> {
    let mc = MonteCarloConfig::default();
    let lhs = complex_curvature_g_with(z, x, &mc)?;
    let rhs = hadwiger_curvature_with(&z.underlying_set()?, x, mc)?.estimate();
    Ok(IdentityCheck::new(lhs, rhs, tolerance))
}

/// `C(Z, x) = Σ_{x ∈ Z'} (−1)^{dim Z'} / f₀(Z')`, zero unless `{x}` is a cell.
pub fn combinatorial_curvature_c(z: &CellComplex, x: &RatVector) -> Rational {
    if !z
        .cells
        .iter()
        .any(|c| c.dim() == 0 && &c.vertices()[0] == x)
    {
        return Rational::zero();
    }
    z.cells
        .iter()
        .filter(|c| c.vertices().contains(x))
        .map(|c| {
            let r = Rational::new(1.into(), (c.vertices().len() as i64).into());
            if c.dim() % 2 == 0 {
                r
            } else {
                -r
            }
        })
        .sum()
}

/// Checks the conic complex axioms exactly. Repeated cones are merged.
pub fn validate_conic(cones: Vec<PolyhedralCone>) -> Result<ConicComplex> {
    let ambient = cones.first().map_or(0, |c| c.ambient_dim());
    let mut unique: Vec<PolyhedralCone> = Vec::new();
    for c in cones {
        if c.ambient_dim() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: c.ambient_dim(),
            });
        }
        if !unique.contains(&c) {
            unique.push(c);
        }
    }
    for c in &unique {
        for f in c.faces() {
            if !unique.contains(&f) {
                return Err(Error::MissingFace {
                    cell: format!("{c:?}"),
                    face: format!("{f:?}"),
                });
            }
        }
    }
    for (i, a) in unique.iter().enumerate() {
        for b in &unique[i + 1..] {
            let meet = a.intersect(b)?;
            if !a.faces().contains(&meet) || !b.faces().contains(&meet) {
                return Err(Error::ImproperIntersection {
                    first: format!("{a:?}"),
                    second: format!("{b:?}"),
                });
            }
        }
    }
    unique.sort_by_key(|c| c.dim());
    Ok(ConicComplex {
        ambient,
        cones: unique,
    })
}

impl ConicComplex {
    /// A cone together with all of its faces.
    pub fn from_cone(c: &PolyhedralCone) -> Result<Self> {
        validate_conic(c.faces())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn cones(&self) -> &[PolyhedralCone] {
        &self.cones
    }

    pub fn maximal_cones(&self) -> Vec<PolyhedralCone> {
        self.cones
            .iter()
            .filter(|c| !self.cones.iter().any(|d| d != *c && d.contains_cone(c)))
            .cloned()
            .collect()
    }
}

/// `Γ(|Z|)` against `Σ_{C ∈ Z} (−1)^{dim C} Γ(C)`.
pub fn conic_gamma_sum(z: &ConicComplex, tolerance: f64) -> Result<IdentityCheck> {
    let mc = MonteCarloConfig::default();
    let support = TangentCone::new(z.ambient, z.maximal_cones())?;
    let lhs = extend_to_union(&dual_valuation(&ConeValuation::uniform_with(mc)), &support)?;
    let rhs = alternating_gamma(z.cones.iter(), &mc)?;
    Ok(IdentityCheck::new(lhs, rhs, tolerance))
}

fn alternating_gamma<'a>(
    cones: impl Iterator<Item = &'a PolyhedralCone>,
    mc: &MonteCarloConfig,
) -> Result<Estimate> {
    let mut total = Estimate::default();
    for c in cones {
        let g = outer_angle_with(c, mc)?;
        total.value += sign(c.dim()) * g.value;
        total.abs_error += g.abs_error;
    }
    Ok(total)
}

/// `Σ_{F ∈ ℱ(C)} (−1)^{dim F} Γ(F)` against `Γ(C)`.
pub fn sommerville_check(c: &PolyhedralCone, tolerance: f64) -> Result<IdentityCheck> {
    sommerville_check_with(c, tolerance, &MonteCarloConfig::default())
}

pub fn sommerville_check_with(
    c: &PolyhedralCone,
    tolerance: f64,
    mc: &MonteCarloConfig,
) -> Result<IdentityCheck> {
    let lhs = alternating_gamma(c.faces().iter(), mc)?;
    let g = outer_angle_with(c, mc)?;
    Ok(IdentityCheck::new(
        lhs,
        Estimate {
            value: g.value,
            abs_error: g.abs_error,
        },
        tolerance,
    ))
}

/// `Σ_{G ⊆ F} (−1)^{dim F}` over faces `F` of `P`; zero for every proper nonempty face `G`.
pub fn local_euler_sum(p: &ConvexPolytope, g: &Face) -> Result<i64> {
    if g.vertex_indices.is_empty() || g.dim >= p.dim() {
        return Err(Error::ImproperFace);
    }
    let gv = g.vertices();
    if !has_face_with_vertices(p, &gv) {
        return Err(Error::ImproperFace);
    }
    Ok(p.all_faces()
        .iter()
        .filter(|f| {
            let fv = f.vertices();
            gv.iter().all(|v| fv.contains(v))
        })
        .map(|f| if f.dim % 2 == 0 { 1 } else { -1 })
        .sum())
}

pub fn local_euler_check(p: &ConvexPolytope, g: &Face) -> Result<bool> {
    Ok(local_euler_sum(p, g)? == 0)
}

/// Cone version of [`local_euler_sum`]; `g` must be a face of `c` other than `c`.
pub fn local_euler_sum_cone(c: &PolyhedralCone, g: &PolyhedralCone) -> Result<i64> {
    let faces = c.faces();
    if g == c || !faces.contains(g) {
        return Err(Error::ImproperFace);
    }
    Ok(faces
        .iter()
        .filter(|f| f.contains_cone(g))
        .map(|f| if f.dim() % 2 == 0 { 1 } else { -1 })
        .sum())
}

pub fn local_euler_check_cone(c: &PolyhedralCone, g: &PolyhedralCone) -> Result<bool> {
    Ok(local_euler_sum_cone(c, g)? == 0)
}
