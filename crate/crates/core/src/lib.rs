//! Vertex curvatures of polyhedra from valuations on polyhedral cones.
//!
//! A polyhedron here is a finite union of convex polytopes with exact rational
//! vertices. For a simple, normalized cone valuation `φ` the curvature at `x` is
//! `κ(P, x) = φ°(Tan(P, x))`, extended to the union of tangent cones by
//! inclusion-exclusion, and the curvatures over all points sum to the Euler
//! characteristic `χ(P)`.
//!
//! ```
//! use polycurv::{fixtures, hadwiger_curvature, RatVector};
//!
//! let l = fixtures::l_shape();
//! let k = hadwiger_curvature(&l, &RatVector::from_ints(&[1, 1])).unwrap();
//! assert!((k.value + 0.25).abs() < 1e-12);
//! ```
//!
//! Combinatorial decisions are exact. Angles are floating point: closed forms
//! up to three effective dimensions and seeded Monte Carlo with a Hoeffding
//! bound beyond that.

pub mod analysis;
pub mod angle;
pub mod cli;
pub mod complexes;
pub mod cone;
mod dd;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod polyhedron;
pub mod polytope;
pub mod valuation;

pub use analysis::{
    candidate_points, critical_point_report, euler_characteristic, gauss_bonnet_report,
    GaussBonnetReport, DEFAULT_TOLERANCE,
};
pub use angle::{
    measure_of_cone, outer_angle, solid_angle, AngleEstimate, Method, MonteCarloConfig,
    SphereMeasure,
};
pub use complexes::{CellComplex, ConicComplex, IdentityCheck};
pub use cone::{dual_cone, is_geometric_vertex, tangent_cone, PolyhedralCone, TangentCone};
pub use error::{Error, Result};
pub use linalg::{rat, RatVector, Rational};
pub use polyhedron::Polyhedron;
pub use polytope::{ConvexPolytope, Face, Halfspace, Hyperplane};
pub use valuation::{
    dual_valuation, extend_to_union, hadwiger_curvature, index, mc_halfsphere_curvature,
    vertex_curvature, ConeValuation, CurvatureValue, Estimate,
};
