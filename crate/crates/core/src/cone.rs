//! Polyhedral cones with apex at the origin.
//!
//! A [`PolyhedralCone`] keeps both descriptions in canonical form:
//!
//! * generators: a reduced row echelon basis of the lineality space plus the
//!   extreme rays, projected onto the orthogonal complement of the lineality and
//!   scaled to primitive integer vectors;
//! * halfspaces: a reduced basis of the implicit equations plus the facet
//!   normals `a` (meaning `⟨a, x⟩ ≤ 0`), projected onto the linear span of the
//!   cone and scaled the same way.
//!
//! Two cones are equal as point sets exactly when these data agree, and the dual
//! cone is obtained by swapping the two sides.

use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::dd::{double_description, Generators};
use crate::error::{Error, Result};
use crate::linalg::{
    check_dims, int_dot, int_rank, int_rat_dot, int_to_f64, int_to_rat, make_primitive,
    primitive_direction, project_out, row_space_basis, IntVec, RatVector,
};
use crate::polyhedron::Polyhedron;
use crate::polytope::ConvexPolytope;

#[derive(PartialEq, Eq, Hash)]
struct ConeData {
    ambient: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    facets: Vec<IntVec>,
    equations: Vec<IntVec>,
}

/// A closed convex polyhedral cone `{Σ λᵢ gᵢ + l : λᵢ ≥ 0, l ∈ L}`.
#[derive(Clone)]
pub struct PolyhedralCone {
    data: Arc<ConeData>,
    facets_f64: Arc<OnceLock<Vec<Vec<f64>>>>,
}

impl PartialEq for PolyhedralCone {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl Eq for PolyhedralCone {}

impl std::hash::Hash for PolyhedralCone {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.data.hash(state);
    }
}

impl fmt::Debug for PolyhedralCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyhedralCone")
            .field("ambient", &self.data.ambient)
            .field(
                "rays",
                &self
                    .rays()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
            )
            .field(
                "lineality",
                &self
                    .lineality_space()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

fn canonical_subspace(vectors: &[IntVec], dim: usize) -> Vec<IntVec> {
    let rows: Vec<RatVector> = vectors.iter().map(|v| int_to_rat(v)).collect();
    row_space_basis(&rows, dim)
        .iter()
        .map(|r| primitive_direction(r))
        .collect()
}

fn canonical_directions(vectors: &[IntVec], modulo: &[IntVec]) -> Vec<IntVec> {
    let basis: Vec<RatVector> = modulo.iter().map(|v| int_to_rat(v)).collect();
    let mut out: Vec<IntVec> = vectors
        .iter()
        .map(|v| {
            if basis.is_empty() {
                make_primitive(v.clone())
            } else {
                primitive_direction(&project_out(&int_to_rat(v), &basis))
            }
        })
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    out.sort();
    out.dedup();
    out
}

impl PolyhedralCone {
    fn from_parts(ambient: usize, gens: Generators, dual: Generators) -> Self {
        let lineality = canonical_subspace(&gens.lineality, ambient);
        let equations = canonical_subspace(&dual.lineality, ambient);
        let rays = canonical_directions(&gens.rays, &lineality);
        let facets = canonical_directions(&dual.rays, &equations);
        PolyhedralCone {
            data: Arc::new(ConeData {
                ambient,
                rays,
                lineality,
                facets,
                equations,
            }),
            facets_f64: Arc::new(OnceLock::new()),
        }
    }

    pub(crate) fn from_int_generators(
        ambient: usize,
        rays: &[IntVec],
        lineality: &[IntVec],
    ) -> Self {
        let dual = double_description(ambient, rays, lineality);
        let gens = double_description(ambient, &dual.rays, &dual.lineality);
        Self::from_parts(ambient, gens, dual)
    }

    pub(crate) fn from_int_hrep(ambient: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> Self {
        let gens = double_description(ambient, ineqs, eqs);
        let dual = double_description(ambient, &gens.rays, &gens.lineality);
        Self::from_parts(ambient, gens, dual)
    }

    /// Cone generated by `rays` plus the linear span of `lineality`.
    pub fn from_generators(
        ambient: usize,
        rays: &[RatVector],
        lineality: &[RatVector],
    ) -> Result<Self> {
        check_dims(rays, ambient)?;
        check_dims(lineality, ambient)?;
        let r: Vec<IntVec> = rays.iter().map(|v| primitive_direction(v)).collect();
        let l: Vec<IntVec> = lineality.iter().map(|v| primitive_direction(v)).collect();
        Ok(Self::from_int_generators(ambient, &r, &l))
    }

    /// Cone `{x : ⟨a, x⟩ ≤ 0 for a in ineqs, ⟨e, x⟩ = 0 for e in eqs}`.
    pub fn from_hrep(ambient: usize, ineqs: &[RatVector], eqs: &[RatVector]) -> Result<Self> {
        check_dims(ineqs, ambient)?;
        check_dims(eqs, ambient)?;
        let a: Vec<IntVec> = ineqs.iter().map(|v| primitive_direction(v)).collect();
        let e: Vec<IntVec> = eqs.iter().map(|v| primitive_direction(v)).collect();
        Ok(Self::from_int_hrep(ambient, &a, &e))
    }

    pub fn full_space(ambient: usize) -> Self {
        Self::from_int_hrep(ambient, &[], &[])
    }

    pub fn origin(ambient: usize) -> Self {
        Self::from_int_generators(ambient, &[], &[])
    }

    /// The closed positive orthant.
    pub fn orthant(ambient: usize) -> Self {
        let rays: Vec<IntVec> = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| BigInt::from((i == j) as i64))
                    .collect()
            })
            .collect();
        Self::from_int_generators(ambient, &rays, &[])
    }

    pub fn ambient_dim(&self) -> usize {
        self.data.ambient
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        self.data.ambient - self.data.equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.data.lineality.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.data.lineality.is_empty()
    }

    pub fn is_full_space(&self) -> bool {
        self.data.lineality.len() == self.data.ambient
    }

    pub fn is_origin(&self) -> bool {
        self.data.rays.is_empty() && self.data.lineality.is_empty()
    }

    pub fn rays(&self) -> Vec<RatVector> {
        self.data.rays.iter().map(|v| int_to_rat(v)).collect()
    }

    /// Basis of the largest linear subspace contained in the cone.
    pub fn lineality_space(&self) -> Vec<RatVector> {
        self.data.lineality.iter().map(|v| int_to_rat(v)).collect()
    }

    /// Facet normals `a` of the irredundant description `⟨a, x⟩ ≤ 0`.
    pub fn facet_normals(&self) -> Vec<RatVector> {
        self.data.facets.iter().map(|v| int_to_rat(v)).collect()
    }

    /// Basis of the orthogonal complement of the linear span.
    pub fn equations(&self) -> Vec<RatVector> {
        self.data.equations.iter().map(|v| int_to_rat(v)).collect()
    }

    pub(crate) fn int_rays(&self) -> &[IntVec] {
        &self.data.rays
    }

    pub(crate) fn int_lineality(&self) -> &[IntVec] {
        &self.data.lineality
    }

    pub(crate) fn int_facets(&self) -> &[IntVec] {
        &self.data.facets
    }

    pub(crate) fn int_equations(&self) -> &[IntVec] {
        &self.data.equations
    }

    /// Facet normals converted to floating point, computed once.
    pub(crate) fn facets_f64(&self) -> &[Vec<f64>] {
        self.facets_f64
            .get_or_init(|| self.data.facets.iter().map(|f| int_to_f64(f)).collect())
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        self.data
            .equations
            .iter()
            .all(|e| int_rat_dot(e, x).is_zero())
            && self
                .data
                .facets
                .iter()
                .all(|a| !int_rat_dot(a, x).is_positive())
    }

    pub(crate) fn contains_int(&self, x: &[BigInt]) -> bool {
        self.data.equations.iter().all(|e| int_dot(e, x).is_zero())
            && self
                .data
                .facets
                .iter()
                .all(|a| !int_dot(a, x).is_positive())
    }

    /// Whether `other ⊆ self`.
    pub fn contains_cone(&self, other: &PolyhedralCone) -> bool {
        other.data.rays.iter().all(|r| self.contains_int(r))
            && other.data.lineality.iter().all(|l| {
                self.data.equations.iter().all(|e| int_dot(e, l).is_zero())
                    && self.data.facets.iter().all(|a| int_dot(a, l).is_zero())
            })
    }

    /// `C° = {y : ⟨x, y⟩ ≤ 0 for all x ∈ C}`.
    pub fn dual(&self) -> PolyhedralCone {
        let d = &self.data;
        PolyhedralCone {
            data: Arc::new(ConeData {
                ambient: d.ambient,
                rays: d.facets.clone(),
                lineality: d.equations.clone(),
                facets: d.rays.clone(),
                equations: d.lineality.clone(),
            }),
            facets_f64: Arc::new(OnceLock::new()),
        }
    }

    pub fn intersect(&self, other: &PolyhedralCone) -> Result<PolyhedralCone> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        if self.contains_cone(other) {
            return Ok(other.clone());
        }
        if other.contains_cone(self) {
            return Ok(self.clone());
        }
        let ineqs: Vec<IntVec> = self
            .data
            .facets
            .iter()
            .chain(&other.data.facets)
            .cloned()
            .collect();
        let eqs: Vec<IntVec> = self
            .data
            .equations
            .iter()
            .chain(&other.data.equations)
            .cloned()
            .collect();
        Ok(Self::from_int_hrep(self.ambient_dim(), &ineqs, &eqs))
    }

    /// Intersection with the closed halfspace `{⟨a, x⟩ ≤ 0}`.
    pub fn intersect_halfspace(&self, a: &RatVector) -> PolyhedralCone {
        let mut ineqs = self.data.facets.clone();
        ineqs.push(primitive_direction(a));
        Self::from_int_hrep(self.ambient_dim(), &ineqs, &self.data.equations)
    }

    /// Intersection with the hyperplane `{⟨a, x⟩ = 0}`.
    pub fn intersect_hyperplane(&self, a: &RatVector) -> PolyhedralCone {
        let mut eqs = self.data.equations.clone();
        eqs.push(primitive_direction(a));
        Self::from_int_hrep(self.ambient_dim(), &self.data.facets, &eqs)
    }

    /// Sum with a linear subspace.
    pub fn plus_subspace(&self, basis: &[RatVector]) -> PolyhedralCone {
        let mut lin = self.data.lineality.clone();
        lin.extend(basis.iter().map(|v| primitive_direction(v)));
        Self::from_int_generators(self.ambient_dim(), &self.data.rays, &lin)
    }

    /// The cone reflected through the origin.
    pub fn negated(&self) -> PolyhedralCone {
        let neg = |vs: &[IntVec]| -> Vec<IntVec> {
            vs.iter().map(|v| v.iter().map(|x| -x).collect()).collect()
        };
        let rays = neg(&self.data.rays);
        Self::from_int_generators(self.ambient_dim(), &rays, &self.data.lineality)
    }

    /// A point in the relative interior (the sum of the extreme rays).
    pub fn relative_interior_point(&self) -> RatVector {
        let n = self.ambient_dim();
        let mut sum = vec![BigInt::zero(); n];
        for r in &self.data.rays {
            for (s, x) in sum.iter_mut().zip(r) {
                *s += x;
            }
        }
        int_to_rat(&sum)
    }

    /// Ray index sets of all nonempty faces, each face being
    /// `cone(rays[S]) + lineality`. The last entry is the cone itself.
    pub(crate) fn face_ray_sets(&self) -> Vec<FixedBitSet> {
        let n_rays = self.data.rays.len();
        let facet_sets: Vec<FixedBitSet> = self
            .data
            .facets
            .iter()
            .map(|a| {
                let mut s = FixedBitSet::with_capacity(n_rays);
                for (i, r) in self.data.rays.iter().enumerate() {
                    if int_dot(a, r).is_zero() {
                        s.insert(i);
                    }
                }
                s
            })
            .collect();
        let mut faces: Vec<FixedBitSet> = Vec::new();
        let mut frontier: Vec<FixedBitSet> = Vec::new();
        for s in &facet_sets {
            if !faces.contains(s) {
                faces.push(s.clone());
                frontier.push(s.clone());
            }
        }
        while let Some(f) = frontier.pop() {
            for s in &facet_sets {
                let mut g = f.clone();
                g.intersect_with(s);
                if !faces.contains(&g) {
                    faces.push(g.clone());
                    frontier.push(g);
                }
            }
        }
        let mut full = FixedBitSet::with_capacity(n_rays);
        full.insert_range(..);
        faces.retain(|f| *f != full);
        faces.sort_by_key(|f| (f.count_ones(..), f.ones().collect::<Vec<_>>()));
        faces.push(full);
        faces
    }

    pub(crate) fn face_dim(&self, rays: &FixedBitSet) -> usize {
        let mut gens: Vec<IntVec> = rays.ones().map(|i| self.data.rays[i].clone()).collect();
        gens.extend(self.data.lineality.iter().cloned());
        int_rank(&gens, self.ambient_dim())
    }

    pub(crate) fn face_from_rays(&self, rays: &FixedBitSet) -> PolyhedralCone {
        if rays.count_ones(..) == self.data.rays.len() {
            return self.clone();
        }
        let gens: Vec<IntVec> = rays.ones().map(|i| self.data.rays[i].clone()).collect();
        Self::from_int_generators(self.ambient_dim(), &gens, &self.data.lineality)
    }

    /// All nonempty faces, from the minimal face (the lineality space, or `{o}`)
    /// up to the cone itself.
    pub fn faces(&self) -> Vec<PolyhedralCone> {
        self.face_ray_sets()
            .iter()
            .map(|s| self.face_from_rays(s))
            .collect()
    }
}

/// Dual cone `C°`.
pub fn dual_cone(c: &PolyhedralCone) -> PolyhedralCone {
    c.dual()
}

pub fn lineality_space(c: &PolyhedralCone) -> Vec<RatVector> {
    c.lineality_space()
}

pub fn cone_faces(c: &PolyhedralCone) -> Vec<PolyhedralCone> {
    c.faces()
}

pub fn intersect_cones(c: &PolyhedralCone, d: &PolyhedralCone) -> Result<PolyhedralCone> {
    c.intersect(d)
}

/// Finite union of convex cones; no pieces means the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentCone {
    ambient: usize,
    pieces: Vec<PolyhedralCone>,
}

impl TangentCone {
    pub fn new(ambient: usize, pieces: Vec<PolyhedralCone>) -> Result<Self> {
        if let Some(p) = pieces.iter().find(|p| p.ambient_dim() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: p.ambient_dim(),
            });
        }
        Ok(TangentCone { ambient, pieces })
    }

    pub fn empty(ambient: usize) -> Self {
        TangentCone {
            ambient,
            pieces: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn pieces(&self) -> &[PolyhedralCone] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, v: &RatVector) -> bool {
        self.pieces.iter().any(|p| p.contains(v))
    }
}

/// Tangent cone of a convex polytope at one of its points, with apex moved to the origin.
pub fn tangent_cone_of_polytope(p: &ConvexPolytope, x: &RatVector) -> Result<PolyhedralCone> {
    if x.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            found: x.dim(),
        });
    }
    if !p.contains(x) {
        return Err(Error::PointNotInPolytope);
    }
    let gens: Vec<IntVec> = p
        .vertices()
        .iter()
        .map(|v| primitive_direction(&v.sub(x)))
        .collect();
    Ok(PolyhedralCone::from_int_generators(
        p.ambient_dim(),
        &gens,
        &[],
    ))
}

/// `Tan(P, x)` as the union of the tangent cones of the pieces containing `x`.
pub fn tangent_cone(p: &Polyhedron, x: &RatVector) -> Result<TangentCone> {
    if x.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            found: x.dim(),
        });
    }
    let pieces = p
        .pieces()
        .iter()
        .filter(|q| q.contains(x))
        .map(|q| tangent_cone_of_polytope(q, x))
        .collect::<Result<Vec<_>>>()?;
    TangentCone::new(p.ambient_dim(), pieces)
}

/// Whether `x` is a geometric vertex of `P`: `x ∈ P` and `Tan(P, x)` is not a
/// union of parallel lines.
pub fn is_geometric_vertex(p: &Polyhedron, x: &RatVector) -> Result<bool> {
    let tan = tangent_cone(p, x)?;
    if tan.is_empty() {
        return Ok(false);
    }
    Ok(translation_subspace(&tan).is_empty())
}

/// Basis of the largest subspace `D` with `Tan + D = Tan`.
///
/// `D` is always a flat of the arrangement formed by the facet and equation
/// hyperplanes of the pieces: the union is a union of faces of that
/// arrangement, and it is invariant exactly along the intersection of the
/// hyperplanes that are needed to carve it out. Flats are tried from the
/// largest down, and invariance along a flat is decided by covering each
/// `piece + flat` with the refined arrangement.
pub fn translation_subspace(tan: &TangentCone) -> Vec<RatVector> {
    let n = tan.ambient_dim();
    let pieces = tan.pieces();
    if pieces.is_empty() {
        return Vec::new();
    }
    let hyperplanes = arrangement_hyperplanes(pieces);

    // Common lineality of all pieces is always a subspace of D.
    let shared = pieces
        .iter()
        .skip(1)
        .fold(pieces[0].lineality_space(), |acc, p| {
            subspace_intersection(&acc, &p.lineality_space(), n)
        });
    if pieces.len() == 1 {
        return shared;
    }

    for flat in flats(&hyperplanes, n) {
        let basis = crate::linalg::nullspace(&flat, n);
        if basis.is_empty() || basis.len() <= shared.len() {
            continue;
        }
        if is_invariant_along(pieces, &basis, &hyperplanes) {
            return basis;
        }
    }
    shared
}

fn subspace_intersection(a: &[RatVector], b: &[RatVector], n: usize) -> Vec<RatVector> {
    // (span a) ∩ (span b) = null(null(a)ᵀ ∪ null(b)ᵀ)
    let mut normals = crate::linalg::nullspace(a, n);
    normals.extend(crate::linalg::nullspace(b, n));
    crate::linalg::nullspace(&normals, n)
}

fn arrangement_hyperplanes(pieces: &[PolyhedralCone]) -> Vec<IntVec> {
    let mut hs: Vec<IntVec> = pieces
        .iter()
        .flat_map(|p| p.int_facets().iter().chain(p.int_equations()))
        .map(|h| {
            let first_negative = h
                .iter()
                .find(|x| !x.is_zero())
                .is_some_and(Signed::is_negative);
            if first_negative {
                h.iter().map(|x| -x).collect()
            } else {
                h.clone()
            }
        })
        .collect();
    hs.sort();
    hs.dedup();
    hs
}

/// Normal sets of all flats of dimension ≥ 1, largest flats first.
fn flats(hyperplanes: &[IntVec], n: usize) -> Vec<Vec<RatVector>> {
    let mut seen: Vec<Vec<RatVector>> = vec![Vec::new()];
    let mut level: Vec<Vec<RatVector>> = vec![Vec::new()];
    let mut out: Vec<Vec<RatVector>> = vec![Vec::new()];
    for _ in 0..n.saturating_sub(1) {
        let mut next: Vec<Vec<RatVector>> = Vec::new();
        for normals in &level {
            for h in hyperplanes {
                let mut rows = normals.clone();
                rows.push(int_to_rat(h));
                let basis = row_space_basis(&rows, n);
                if basis.len() == normals.len() || basis.len() >= n {
                    continue;
                }
                if !seen.contains(&basis) {
                    seen.push(basis.clone());
                    next.push(basis);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

fn is_invariant_along(
    pieces: &[PolyhedralCone],
    basis: &[RatVector],
    hyperplanes: &[IntVec],
) -> bool {
    pieces.iter().all(|p| {
        let swept = p.plus_subspace(basis);
        is_covered(&swept, pieces, hyperplanes, 0)
    })
}

/// Whether `cell ⊆ ∪ pieces`, refining `cell` by the arrangement as needed.
fn is_covered(
    cell: &PolyhedralCone,
    pieces: &[PolyhedralCone],
    hyperplanes: &[IntVec],
    next: usize,
) -> bool {
    if pieces.iter().any(|p| p.contains_cone(cell)) {
        return true;
    }
    // A fully refined cell lies in one face of the arrangement; not contained
    // in any piece means its relative interior is uncovered.
    let Some((offset, h)) = hyperplanes[next..]
        .iter()
        .enumerate()
        .find(|(_, h)| cuts(cell, h))
    else {
        return false;
    };
    let level = next + offset + 1;
    let h_rat = int_to_rat(h);
    let lower = cell.intersect_halfspace(&h_rat);
    let upper = cell.intersect_halfspace(&h_rat.neg());
    is_covered(&lower, pieces, hyperplanes, level) && is_covered(&upper, pieces, hyperplanes, level)
}

/// Whether the hyperplane `⟨h, x⟩ = 0` passes through the relative interior of `cell`.
fn cuts(cell: &PolyhedralCone, h: &[BigInt]) -> bool {
    let mut pos = false;
    let mut neg = false;
    for r in cell.int_rays() {
        match int_dot(h, r).sign() {
            num_bigint::Sign::Plus => pos = true,
            num_bigint::Sign::Minus => neg = true,
            num_bigint::Sign::NoSign => {}
        }
    }
    let along_lineality = cell
        .int_lineality()
        .iter()
        .any(|l| !int_dot(h, l).is_zero());
    along_lineality || (pos && neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::polytope::ConvexPolytope;

    fn v(c: &[i64]) -> RatVector {
        RatVector::from_ints(c)
    }

    fn unit_square() -> ConvexPolytope {
        ConvexPolytope::hull(&[v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]).unwrap()
    }

    fn quadrant() -> PolyhedralCone {
        PolyhedralCone::orthant(2)
    }

    #[test]
    fn tangent_cones_of_square() {
        let sq = unit_square();
        assert_eq!(
            tangent_cone_of_polytope(&sq, &v(&[0, 0])).unwrap(),
            quadrant()
        );
        let edge =
            tangent_cone_of_polytope(&sq, &RatVector::new(vec![rat(1, 2), rat(0, 1)])).unwrap();
        assert_eq!(
            edge,
            PolyhedralCone::from_hrep(2, &[v(&[0, -1])], &[]).unwrap()
        );
        let inner =
            tangent_cone_of_polytope(&sq, &RatVector::new(vec![rat(1, 2), rat(1, 2)])).unwrap();
        assert!(inner.is_full_space());
        assert!(matches!(
            tangent_cone_of_polytope(&sq, &v(&[2, 0])),
            Err(Error::PointNotInPolytope)
        ));
    }

    #[test]
    fn dual_examples() {
        let third = PolyhedralCone::from_hrep(2, &[v(&[1, 0]), v(&[0, 1])], &[]).unwrap();
        assert_eq!(quadrant().dual(), third);
        assert!(PolyhedralCone::full_space(3).dual().is_origin());
        assert!(PolyhedralCone::origin(3).dual().is_full_space());
    }

    #[test]
    fn lineality_examples() {
        let upper = PolyhedralCone::from_hrep(2, &[v(&[0, -1])], &[]).unwrap();
        assert_eq!(upper.lineality_space(), vec![v(&[1, 0])]);
        assert!(quadrant().lineality_space().is_empty());
        assert_eq!(PolyhedralCone::full_space(2).lineality_space().len(), 2);
    }

    #[test]
    fn face_examples() {
        let faces = quadrant().faces();
        assert_eq!(faces.len(), 4);
        assert!(faces[0].is_origin());
        assert_eq!(faces.last().unwrap(), &quadrant());
        assert_eq!(PolyhedralCone::full_space(2).faces().len(), 1);
        let upper = PolyhedralCone::from_hrep(2, &[v(&[0, -1])], &[]).unwrap();
        let faces = upper.faces();
        assert_eq!(faces.len(), 2);
        assert_eq!(faces[0].lineality_dim(), 1);
        assert_eq!(faces[0].dim(), 1);
    }

    #[test]
    fn intersection_examples() {
        // quadrant ∩ {y ≤ 0} is the positive x-axis ray
        let lower = PolyhedralCone::from_hrep(2, &[v(&[0, 1])], &[]).unwrap();
        let ray = quadrant().intersect(&lower).unwrap();
        assert_eq!(ray.rays(), vec![v(&[1, 0])]);
        assert_eq!(ray.dim(), 1);
        assert_eq!(
            quadrant()
                .intersect(&PolyhedralCone::full_space(2))
                .unwrap(),
            quadrant()
        );
        let upper = PolyhedralCone::from_hrep(2, &[v(&[0, -1])], &[]).unwrap();
        let line = upper.intersect(&upper.negated()).unwrap();
        assert_eq!(line.lineality_dim(), 1);
        assert_eq!(line.rays().len(), 0);
    }

    #[test]
    fn l_shape_tangent_cone() {
        let a = ConvexPolytope::hull(&[v(&[0, 0]), v(&[2, 0]), v(&[0, 1]), v(&[2, 1])]).unwrap();
        let b = ConvexPolytope::hull(&[v(&[0, 0]), v(&[1, 0]), v(&[0, 2]), v(&[1, 2])]).unwrap();
        let l = Polyhedron::new(2, vec![a, b]).unwrap();
        let tan = tangent_cone(&l, &v(&[1, 1])).unwrap();
        assert_eq!(tan.pieces().len(), 2);
        // 270°: everything except the open first quadrant
        for (dir, inside) in [
            ([1, 1], false),
            ([-1, 1], true),
            ([1, -1], true),
            ([-1, -1], true),
            ([1, 0], true),
        ] {
            assert_eq!(tan.contains(&v(&dir)), inside, "{dir:?}");
        }
        assert!(tangent_cone(&l, &v(&[5, 5])).unwrap().is_empty());
    }

    #[test]
    fn geometric_vertices() {
        let sq = Polyhedron::new(2, vec![unit_square()]).unwrap();
        assert!(is_geometric_vertex(&sq, &v(&[0, 0])).unwrap());
        assert!(!is_geometric_vertex(&sq, &RatVector::new(vec![rat(1, 2), rat(0, 1)])).unwrap());
        assert!(!is_geometric_vertex(&sq, &v(&[3, 3])).unwrap());

        let a = ConvexPolytope::hull(&[v(&[0, 0]), v(&[2, 0]), v(&[0, 1]), v(&[2, 1])]).unwrap();
        let b = ConvexPolytope::hull(&[v(&[0, 0]), v(&[1, 0]), v(&[0, 2]), v(&[1, 2])]).unwrap();
        let l = Polyhedron::new(2, vec![a, b]).unwrap();
        assert!(is_geometric_vertex(&l, &v(&[1, 1])).unwrap());
    }

    #[test]
    fn union_of_parallel_lines_without_line_pieces() {
        // Two quadrants forming the upper halfplane: no piece contains a line.
        let a = ConvexPolytope::hull(&[v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]).unwrap();
        let b = ConvexPolytope::hull(&[v(&[0, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[-1, 1])]).unwrap();
        let p = Polyhedron::new(2, vec![a, b]).unwrap();
        let tan = tangent_cone(&p, &v(&[0, 0])).unwrap();
        assert!(tan.pieces().iter().all(PolyhedralCone::is_pointed));
        assert_eq!(translation_subspace(&tan), vec![v(&[1, 0])]);
        assert!(!is_geometric_vertex(&p, &v(&[0, 0])).unwrap());
    }
}
