//! Convex polytopes with exact vertices.
//!
//! A polytope `P ⊂ Rⁿ` is stored through its homogenization, the pointed cone
//! in `Rⁿ⁺¹` generated by `(v, 1)` for the vertices `v`. Extreme rays of that
//! cone are the vertices, its facets are the facets of `P`, its equations are
//! the affine hull, and intersections of polytopes are intersections of the
//! homogenized cones.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::linalg::{
    affine_dim, check_dims, int_to_rat, primitive_direction, IntVec, RatVector, Rational,
};

/// Closed halfspace `{x : ⟨normal, x⟩ ≤ offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: RatVector,
    #[serde(with = "crate::linalg::rational_serde")]
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: RatVector, offset: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Halfspace { normal, offset })
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        self.normal.dot(x) <= self.offset
    }

    /// The opposite closed halfspace sharing the same boundary.
    pub fn flipped(&self) -> Halfspace {
        Halfspace {
            normal: self.normal.neg(),
            offset: -self.offset.clone(),
        }
    }

    fn homogenized(&self) -> RatVector {
        self.normal.extended(-self.offset.clone())
    }
}

/// Affine hyperplane `{x : ⟨normal, x⟩ = offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hyperplane {
    pub normal: RatVector,
    #[serde(with = "crate::linalg::rational_serde")]
    pub offset: Rational,
}

impl Hyperplane {
    pub fn contains(&self, x: &RatVector) -> bool {
        self.normal.dot(x) == self.offset
    }
}

struct PolytopeData {
    ambient: usize,
    vertices: Vec<RatVector>,
    homog: PolyhedralCone,
    /// index into `vertices` for each ray of `homog`
    ray_to_vertex: Vec<usize>,
    faces: OnceLock<Vec<FaceRecord>>,
}

#[derive(Clone)]
struct FaceRecord {
    vertices: Vec<usize>,
    dim: usize,
}

/// Nonempty compact convex polytope; lower-dimensional polytopes are allowed.
#[derive(Clone)]
pub struct ConvexPolytope(Arc<PolytopeData>);

impl PartialEq for ConvexPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.0.ambient == other.0.ambient && self.0.vertices == other.0.vertices
    }
}

impl Eq for ConvexPolytope {}

impl std::hash::Hash for ConvexPolytope {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.vertices.hash(state);
    }
}

impl fmt::Debug for ConvexPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConvexPolytope[")?;
        for (i, v) in self.0.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for ConvexPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl ConvexPolytope {
    /// Convex hull of a nonempty finite point set; non-extreme points are dropped.
    pub fn hull(points: &[RatVector]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyPointSet)?;
        let n = first.dim();
        check_dims(points, n)?;
        let gens: Vec<IntVec> = points
            .iter()
            .map(|p| primitive_direction(&p.extended(Rational::one())))
            .collect();
        let cone = PolyhedralCone::from_int_generators(n + 1, &gens, &[]);
        Self::from_homogenized(cone)?
            .ok_or(Error::Internal("hull of a nonempty set came out empty"))
    }

    /// Bounded intersection of halfspaces and hyperplanes; `None` when empty.
    pub fn from_hrep(
        ambient: usize,
        halfspaces: &[Halfspace],
        equations: &[Hyperplane],
    ) -> Result<Option<Self>> {
        for h in halfspaces {
            if h.normal.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: h.normal.dim(),
                });
            }
        }
        for h in equations {
            if h.normal.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: h.normal.dim(),
                });
            }
        }
        let mut ineqs: Vec<IntVec> = halfspaces
            .iter()
            .map(|h| primitive_direction(&h.homogenized()))
            .collect();
        let mut t_nonneg = vec![BigInt::zero(); ambient + 1];
        t_nonneg[ambient] = BigInt::from(-1);
        ineqs.push(t_nonneg);
        let eqs: Vec<IntVec> = equations
            .iter()
            .map(|h| primitive_direction(&h.normal.extended(-h.offset.clone())))
            .collect();
        Self::from_homogenized(PolyhedralCone::from_int_hrep(ambient + 1, &ineqs, &eqs))
    }

    fn from_homogenized(cone: PolyhedralCone) -> Result<Option<Self>> {
        let n = cone.ambient_dim() - 1;
        if !cone.is_pointed() {
            return Err(Error::Unbounded);
        }
        let mut vertices = Vec::with_capacity(cone.int_rays().len());
        for r in cone.int_rays() {
            let t = &r[n];
            if !t.is_positive() {
                return Err(Error::Unbounded);
            }
            let t = Rational::from_integer(t.clone());
            vertices.push(RatVector::new(
                r[..n]
                    .iter()
                    .map(|x| Rational::from_integer(x.clone()) / &t)
                    .collect(),
            ));
        }
        if vertices.is_empty() {
            return Ok(None);
        }
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        let mut ray_to_vertex = vec![0; vertices.len()];
        for (pos, &ray) in order.iter().enumerate() {
            ray_to_vertex[ray] = pos;
        }
        let sorted: Vec<RatVector> = order.iter().map(|&i| vertices[i].clone()).collect();
        Ok(Some(ConvexPolytope(Arc::new(PolytopeData {
            ambient: n,
            vertices: sorted,
            homog: cone,
            ray_to_vertex,
            faces: OnceLock::new(),
        }))))
    }

    /// Axis-aligned box `[lo₁, hi₁] × … × [loₙ, hiₙ]`.
    pub fn axis_box(lo: &RatVector, hi: &RatVector) -> Result<Self> {
        if lo.dim() != hi.dim() {
            return Err(Error::DimensionMismatch {
                expected: lo.dim(),
                found: hi.dim(),
            });
        }
        let n = lo.dim();
        let mut points = Vec::with_capacity(1 << n);
        for mask in 0..(1usize << n) {
            let coords = (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        hi[i].clone()
                    } else {
                        lo[i].clone()
                    }
                })
                .collect();
            points.push(RatVector::new(coords));
        }
        Self::hull(&points)
    }

    pub fn ambient_dim(&self) -> usize {
        self.0.ambient
    }

    pub fn dim(&self) -> usize {
        self.0.homog.dim() - 1
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[RatVector] {
        &self.0.vertices
    }

    /// Irredundant facet halfspaces within the affine hull, plus the affine hull equations.
    pub fn v_to_h(&self) -> (Vec<Halfspace>, Vec<Hyperplane>) {
        let n = self.ambient_dim();
        let cone = &self.0.homog;
        let split = |v: &IntVec| -> (RatVector, Rational) {
            let r = int_to_rat(v);
            (RatVector::new(r.coords()[..n].to_vec()), -r[n].clone())
        };
        let halfspaces = cone
            .int_facets()
            .iter()
            .filter(|a| {
                cone.int_rays()
                    .iter()
                    .any(|r| crate::linalg::int_dot(a, r).is_zero())
            })
            .map(|a| {
                let (normal, offset) = split(a);
                Halfspace { normal, offset }
            })
            .collect();
        let equations = cone
            .int_equations()
            .iter()
            .map(|e| {
                let (normal, offset) = split(e);
                Hyperplane { normal, offset }
            })
            .collect();
        (halfspaces, equations)
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        x.dim() == self.ambient_dim() && self.0.homog.contains(&x.extended(Rational::one()))
    }

    /// `P ∩ Q`, or `None` when the intersection is empty.
    pub fn intersect(&self, other: &ConvexPolytope) -> Result<Option<ConvexPolytope>> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: other.ambient_dim(),
            });
        }
        if other.vertices().iter().all(|v| self.contains(v)) {
            return Ok(Some(other.clone()));
        }
        if self.vertices().iter().all(|v| other.contains(v)) {
            return Ok(Some(self.clone()));
        }
        let cone = self.0.homog.intersect(&other.0.homog)?;
        Self::from_homogenized(cone)
    }

    pub fn intersect_halfspace(&self, h: &Halfspace) -> Result<Option<ConvexPolytope>> {
        if self.vertices().iter().all(|v| h.contains(v)) {
            return Ok(Some(self.clone()));
        }
        let cone = self.0.homog.intersect_halfspace(&h.homogenized());
        Self::from_homogenized(cone)
    }

    pub fn intersect_hyperplane(&self, h: &Hyperplane) -> Result<Option<ConvexPolytope>> {
        let cone = self
            .0
            .homog
            .intersect_hyperplane(&h.normal.extended(-h.offset.clone()));
        Self::from_homogenized(cone)
    }

    pub fn translate(&self, t: &RatVector) -> Result<ConvexPolytope> {
        let moved: Vec<RatVector> = self.vertices().iter().map(|v| v.add(t)).collect();
        Self::hull(&moved)
    }

    fn face_records(&self) -> &[FaceRecord] {
        self.0.faces.get_or_init(|| {
            let cone = &self.0.homog;
            cone.face_ray_sets()
                .into_iter()
                .filter(|s| s.count_ones(..) > 0)
                .map(|s| {
                    let mut vertices: Vec<usize> =
                        s.ones().map(|r| self.0.ray_to_vertex[r]).collect();
                    vertices.sort_unstable();
                    FaceRecord {
                        dim: cone.face_dim(&s) - 1,
                        vertices,
                    }
                })
                .collect()
        })
    }

    /// All nonempty faces, including `P` itself.
    pub fn all_faces(&self) -> Vec<Face> {
        self.face_records()
            .iter()
            .map(|r| Face {
                owner: self.clone(),
                vertex_indices: r.vertices.clone(),
                dim: r.dim,
            })
            .collect()
    }

    /// All `k`-dimensional faces.
    pub fn faces(&self, k: usize) -> Vec<Face> {
        self.all_faces()
            .into_iter()
            .filter(|f| f.dim == k)
            .collect()
    }

    /// Face where `⟨ξ, ·⟩` attains its maximum over `P`.
    pub fn support_set(&self, xi: &RatVector) -> Result<Face> {
        if xi.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: xi.dim(),
            });
        }
        if xi.is_zero() {
            return Err(Error::ZeroVector);
        }
        let values: Vec<Rational> = self.vertices().iter().map(|v| xi.dot(v)).collect();
        let max = values.iter().max().expect("polytopes are nonempty").clone();
        let vertex_indices: Vec<usize> = (0..values.len()).filter(|&i| values[i] == max).collect();
        let points: Vec<RatVector> = vertex_indices
            .iter()
            .map(|&i| self.vertices()[i].clone())
            .collect();
        Ok(Face {
            owner: self.clone(),
            dim: affine_dim(&points),
            vertex_indices,
        })
    }

    /// Pulling triangulation: the lexicographically smallest vertex is coned
    /// over the triangulations of the facets that miss it, recursively.
    pub fn triangulate(&self) -> Result<Vec<ConvexPolytope>> {
        self.pulling_simplices()?
            .iter()
            .map(|s| ConvexPolytope::hull(s))
            .collect()
    }

    fn pulling_simplices(&self) -> Result<Vec<Vec<RatVector>>> {
        let d = self.dim();
        if self.vertices().len() == d + 1 {
            return Ok(vec![self.vertices().to_vec()]);
        }
        let apex = &self.vertices()[0];
        let mut out = Vec::new();
        for facet in self.faces(d - 1) {
            if facet.vertex_indices.contains(&0) {
                continue;
            }
            for mut simplex in facet.to_polytope()?.pulling_simplices()? {
                simplex.push(apex.clone());
                out.push(simplex);
            }
        }
        Ok(out)
    }
}

/// Exact `d`-volume of a full-dimensional simplex in `R^d`.
pub fn simplex_volume(vertices: &[RatVector]) -> Result<Rational> {
    let (base, rest) = vertices.split_first().ok_or(Error::EmptyPointSet)?;
    let d = base.dim();
    if rest.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            found: vertices.len(),
        });
    }
    let rows: Vec<Vec<Rational>> = rest.iter().map(|v| v.sub(base).into_inner()).collect();
    let det = determinant(rows);
    let factorial: BigInt = (1..=d).map(BigInt::from).product();
    Ok(det.abs() / Rational::from_integer(factorial))
}

#[allow(clippy::needless_range_loop)]
fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[col][col];
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// A nonempty face of a polytope, identified by its vertex subset.
#[derive(Clone, Debug)]
pub struct Face {
    pub owner: ConvexPolytope,
    pub vertex_indices: Vec<usize>,
    pub dim: usize,
}

impl PartialEq for Face {
    fn eq(&self, other: &Self) -> bool {
        self.vertices() == other.vertices()
    }
}

impl Face {
    pub fn vertices(&self) -> Vec<RatVector> {
        self.vertex_indices
            .iter()
            .map(|&i| self.owner.vertices()[i].clone())
            .collect()
    }

    pub fn to_polytope(&self) -> Result<ConvexPolytope> {
        if self.vertex_indices.len() == self.owner.vertices().len() {
            return Ok(self.owner.clone());
        }
        ConvexPolytope::hull(&self.vertices())
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.vertex_indices
            .iter()
            .all(|i| other.vertex_indices.contains(i))
    }
}
