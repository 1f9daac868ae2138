//! Euler characteristics, candidate points, and Gauss-Bonnet style reports.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RatVector;
use crate::polyhedron::Polyhedron;
use crate::polytope::ConvexPolytope;
use crate::valuation::{
    check_generic, index_from_families, vertex_curvature, ConeValuation, CurvatureValue, Estimate,
};

pub use crate::complexes::euler_characteristic_complex;

/// Absolute tolerance used by exact angle paths.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Per-point values, their sum, and the comparison with `χ(P)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussBonnetReport {
    /// Sorted by point, lexicographically.
    pub points: Vec<CurvatureValue>,
    pub curvature_sum: Estimate,
    pub euler_characteristic: i64,
    pub tolerance: f64,
    pub pass: bool,
}

impl GaussBonnetReport {
    fn assemble(points: Vec<CurvatureValue>, chi: i64, tolerance: f64) -> Self {
        let curvature_sum: Estimate = points.iter().map(|c| c.estimate()).sum();
        let pass = (curvature_sum.value - chi as f64).abs() <= tolerance + curvature_sum.abs_error;
        GaussBonnetReport {
            points,
            curvature_sum,
            euler_characteristic: chi,
            tolerance,
            pass,
        }
    }

    pub fn value_at(&self, x: &RatVector) -> Option<&CurvatureValue> {
        self.points.iter().find(|c| &c.point == x)
    }
}

fn chi_of(families: &[(Vec<usize>, ConvexPolytope)]) -> i64 {
    families
        .iter()
        .map(|(idx, _)| if idx.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

fn candidates_of(families: &[(Vec<usize>, ConvexPolytope)]) -> Vec<RatVector> {
    let set: BTreeSet<RatVector> = families
        .iter()
        .flat_map(|(_, q)| q.vertices().iter().cloned())
        .collect();
    set.into_iter().collect()
}

/// `χ(P)` by inclusion-exclusion over nonempty intersections of pieces.
pub fn euler_characteristic(p: &Polyhedron) -> Result<i64> {
    Ok(chi_of(&p.nonempty_intersections()?))
}

/// Vertices of all nonempty intersections of pieces, deduplicated and sorted.
/// Every point with nonzero curvature is among them.
pub fn candidate_points(p: &Polyhedron) -> Result<Vec<RatVector>> {
    Ok(candidates_of(&p.nonempty_intersections()?))
}

/// Evaluates `κ` at every candidate point and compares the sum with `χ(P)`.
pub fn gauss_bonnet_report(
    p: &Polyhedron,
    phi: &ConeValuation,
    tolerance: f64,
) -> Result<GaussBonnetReport> {
    if !(phi.simple && phi.normalized) {
        return Err(Error::HypothesesViolated {
            name: phi.name.clone(),
        });
    }
    let families = p.nonempty_intersections()?;
    let points = candidates_of(&families)
        .par_iter()
        .map(|x| vertex_curvature(phi, p, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(GaussBonnetReport::assemble(
        points,
        chi_of(&families),
        tolerance,
    ))
}

/// Sums `i(P, x, ξ)` over candidate points and compares with `χ(P)`.
pub fn critical_point_report(
    p: &Polyhedron,
    xi: &RatVector,
    tolerance: f64,
) -> Result<GaussBonnetReport> {
    if xi.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            found: xi.dim(),
        });
    }
    if xi.is_zero() {
        return Err(Error::ZeroVector);
    }
    let families = p.nonempty_intersections()?;
    check_generic(&families, xi)?;
    let points = candidates_of(&families)
        .into_par_iter()
        .map(|x| {
            let i = index_from_families(&families, &x, xi)?;
            Ok(CurvatureValue {
                point: x,
                value: i as f64,
                abs_error: 0.0,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GaussBonnetReport::assemble(
        points,
        chi_of(&families),
        tolerance,
    ))
}
