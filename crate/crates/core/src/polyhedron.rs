use crate::error::{Error, Result};
use crate::linalg::RatVector;
use crate::polytope::ConvexPolytope;

/// Largest number of pieces an inclusion-exclusion sum will enumerate.
pub const MAX_INCLUSION_EXCLUSION_PIECES: usize = 20;

/// A finite union of convex polytopes. No pieces is the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    ambient: usize,
    pieces: Vec<ConvexPolytope>,
}

impl Polyhedron {
    pub fn new(ambient: usize, pieces: Vec<ConvexPolytope>) -> Result<Self> {
        if let Some(p) = pieces.iter().find(|p| p.ambient_dim() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: p.ambient_dim(),
            });
        }
        Ok(Polyhedron { ambient, pieces })
    }

    pub fn empty(ambient: usize) -> Self {
        Polyhedron {
            ambient,
            pieces: Vec::new(),
        }
    }

    pub fn from_convex(p: ConvexPolytope) -> Self {
        Polyhedron {
            ambient: p.ambient_dim(),
            pieces: vec![p],
        }
    }

    /// One piece per vertex list, each taken as a convex hull.
    pub fn from_vertex_lists(ambient: usize, lists: &[Vec<RatVector>]) -> Result<Self> {
        let pieces = lists
            .iter()
            .map(|l| ConvexPolytope::hull(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient, pieces)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn pieces(&self) -> &[ConvexPolytope] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn with_piece(&self, piece: ConvexPolytope) -> Result<Polyhedron> {
        let mut pieces = self.pieces.clone();
        pieces.push(piece);
        Polyhedron::new(self.ambient, pieces)
    }

    pub fn translate(&self, t: &RatVector) -> Result<Polyhedron> {
        let pieces = self
            .pieces
            .iter()
            .map(|p| p.translate(t))
            .collect::<Result<Vec<_>>>()?;
        Polyhedron::new(self.ambient, pieces)
    }

    pub(crate) fn check_cap(count: usize) -> Result<()> {
        if count > MAX_INCLUSION_EXCLUSION_PIECES {
            return Err(Error::CapExceeded {
                count,
                limit: MAX_INCLUSION_EXCLUSION_PIECES,
            });
        }
        Ok(())
    }

    /// Every nonempty intersection `P_{i₁} ∩ … ∩ P_{i_r}` with its index set,
    /// in depth-first order. Supersets of empty intersections are skipped.
    pub fn nonempty_intersections(&self) -> Result<Vec<(Vec<usize>, ConvexPolytope)>> {
        Self::check_cap(self.pieces.len())?;
        let mut out = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            self.extend_family(vec![i], p.clone(), &mut out)?;
        }
        Ok(out)
    }

    fn extend_family(
        &self,
        indices: Vec<usize>,
        current: ConvexPolytope,
        out: &mut Vec<(Vec<usize>, ConvexPolytope)>,
    ) -> Result<()> {
        let last = *indices.last().expect("families are nonempty");
        out.push((indices.clone(), current.clone()));
        for j in last + 1..self.pieces.len() {
            if let Some(next) = current.intersect(&self.pieces[j])? {
                let mut idx = indices.clone();
                idx.push(j);
                self.extend_family(idx, next, out)?;
            }
        }
        Ok(())
    }
}
