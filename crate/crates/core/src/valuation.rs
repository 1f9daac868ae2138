//! Vertex curvatures built from cone valuations.
//!
//! A simple, normalized valuation `φ` on cones gives the curvature
//! `κ(P, x) = φ°(Tan(P, x))`, where `φ°(C) = φ(C°)` is extended to the finite
//! union `Tan(P, x)` by inclusion-exclusion. Only pieces containing `x`
//! contribute, so the enumeration is over the local pieces.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::angle::{
    measure_of_cone, AngleEstimate, MonteCarloConfig, SphereMeasure, SphereSampler,
};
use crate::cone::{tangent_cone, PolyhedralCone, TangentCone};
use crate::error::{Error, Result};
use crate::linalg::{int_to_f64, RatVector, Rational};
use crate::polyhedron::Polyhedron;
use crate::polytope::ConvexPolytope;

pub type ConeEval = Arc<dyn Fn(&PolyhedralCone) -> Result<AngleEstimate> + Send + Sync>;

/// A real-valued function on polyhedral cones with declared properties.
#[derive(Clone)]
pub struct ConeValuation {
    pub name: String,
    pub simple: bool,
    pub normalized: bool,
    eval: ConeEval,
}

impl fmt::Debug for ConeValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConeValuation")
            .field("name", &self.name)
            .field("simple", &self.simple)
            .field("normalized", &self.normalized)
            .finish()
    }
}

impl ConeValuation {
    pub fn new(
        name: impl Into<String>,
        simple: bool,
        normalized: bool,
        eval: impl Fn(&PolyhedralCone) -> Result<AngleEstimate> + Send + Sync + 'static,
    ) -> Self {
        ConeValuation {
            name: name.into(),
            simple,
            normalized,
            eval: Arc::new(eval),
        }
    }

    /// `C ↦ σ(C ∩ S^{n-1})`.
    pub fn uniform() -> Self {
        Self::uniform_with(MonteCarloConfig::default())
    }

    pub fn uniform_with(mc: MonteCarloConfig) -> Self {
        Self::from_measure(SphereMeasure::Uniform, mc)
    }

    /// `C ↦ μ(C ∩ S^{n-1})`, with flags taken from the measure's declarations.
    pub fn from_measure(mu: SphereMeasure, mc: MonteCarloConfig) -> Self {
        let name = format!("σ[{}]", mu.name());
        let (simple, normalized) = (mu.vanishes_on_great_subspheres(), mu.is_normalized());
        Self::new(name, simple, normalized, move |c| {
            measure_of_cone(&mu, c, &mc)
        })
    }

    pub fn eval(&self, c: &PolyhedralCone) -> Result<AngleEstimate> {
        (self.eval)(c)
    }

    fn check_hypotheses(&self) -> Result<()> {
        if self.simple && self.normalized {
            Ok(())
        } else {
            Err(Error::HypothesesViolated {
                name: self.name.clone(),
            })
        }
    }
}

/// `φ°(C) = φ(C°)`. No properties of `φ` carry over to `φ°`, so both flags are cleared.
pub fn dual_valuation(phi: &ConeValuation) -> ConeValuation {
    let inner = phi.eval.clone();
    ConeValuation::new(format!("{}°", phi.name), false, false, move |c| {
        inner(&c.dual())
    })
}

/// A value with an absolute error bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub abs_error: f64,
}

impl Estimate {
    pub fn exact(value: f64) -> Self {
        Estimate {
            value,
            abs_error: 0.0,
        }
    }

    pub fn agrees_with(&self, target: f64, slack: f64) -> bool {
        (self.value - target).abs() <= self.abs_error + slack
    }
}

impl std::ops::Add for Estimate {
    type Output = Estimate;
    fn add(self, rhs: Estimate) -> Estimate {
        Estimate {
            value: self.value + rhs.value,
            abs_error: self.abs_error + rhs.abs_error,
        }
    }
}

impl std::iter::Sum for Estimate {
    fn sum<I: Iterator<Item = Estimate>>(iter: I) -> Estimate {
        iter.fold(Estimate::default(), |a, b| a + b)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvatureValue {
    pub point: RatVector,
    pub value: f64,
    pub abs_error: f64,
}

impl CurvatureValue {
    fn new(point: &RatVector, e: Estimate) -> Self {
        CurvatureValue {
            point: point.clone(),
            value: e.value,
            abs_error: e.abs_error,
        }
    }

    pub fn estimate(&self) -> Estimate {
        Estimate {
            value: self.value,
            abs_error: self.abs_error,
        }
    }
}

/// Inclusion-exclusion value of `phi` on the union `U`; errors are summed.
pub fn extend_to_union(phi: &ConeValuation, u: &TangentCone) -> Result<Estimate> {
    let pieces = u.pieces();
    Polyhedron::check_cap(pieces.len())?;
    let mut cache: HashMap<PolyhedralCone, AngleEstimate> = HashMap::new();
    let mut total = Estimate::default();
    for (i, p) in pieces.iter().enumerate() {
        ie_step(phi, pieces, i, p.clone(), 1.0, &mut cache, &mut total)?;
    }
    Ok(total)
}

fn ie_step(
    phi: &ConeValuation,
    pieces: &[PolyhedralCone],
    last: usize,
    current: PolyhedralCone,
    sign: f64,
    cache: &mut HashMap<PolyhedralCone, AngleEstimate>,
    total: &mut Estimate,
) -> Result<()> {
    let est = match cache.get(&current) {
        Some(e) => *e,
        None => {
            let e = phi.eval(&current)?;
            cache.insert(current.clone(), e);
            e
        }
    };
    total.value += sign * est.value;
    total.abs_error += est.abs_error;
    for j in last + 1..pieces.len() {
        let next = current.intersect(&pieces[j])?;
        ie_step(phi, pieces, j, next, -sign, cache, total)?;
    }
    Ok(())
}

/// Same union with repeated pieces and pieces inside another piece removed.
fn reduced(tan: &TangentCone) -> Result<TangentCone> {
    let pieces = tan.pieces();
    let mut keep: Vec<PolyhedralCone> = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        let covered = pieces
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && q.contains_cone(p) && (!p.contains_cone(q) || j < i));
        if !covered {
            keep.push(p.clone());
        }
    }
    TangentCone::new(tan.ambient_dim(), keep)
}

fn check_point(p: &Polyhedron, x: &RatVector) -> Result<()> {
    if x.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            found: x.dim(),
        });
    }
    Ok(())
}

/// `κ(P, x) = φ°(Tan(P, x))`, zero off `P`. `φ` must be simple and normalized.
pub fn vertex_curvature(
    phi: &ConeValuation,
    p: &Polyhedron,
    x: &RatVector,
) -> Result<CurvatureValue> {
    phi.check_hypotheses()?;
    check_point(p, x)?;
    let tan = tangent_cone(p, x)?;
    if tan.is_empty() {
        return Ok(CurvatureValue::new(x, Estimate::exact(0.0)));
    }
    let e = extend_to_union(&dual_valuation(phi), &reduced(&tan)?)?;
    Ok(CurvatureValue::new(x, e))
}

/// Curvature from the uniform measure: the additively extended outer angle.
pub fn hadwiger_curvature(p: &Polyhedron, x: &RatVector) -> Result<CurvatureValue> {
    vertex_curvature(&ConeValuation::uniform(), p, x)
}

pub fn hadwiger_curvature_with(
    p: &Polyhedron,
    x: &RatVector,
    mc: MonteCarloConfig,
) -> Result<CurvatureValue> {
    vertex_curvature(&ConeValuation::uniform_with(mc), p, x)
}

/// Fails unless every nonempty intersection of pieces meets its
/// `ξ`-supporting hyperplane in a single point.
pub fn check_generic(families: &[(Vec<usize>, ConvexPolytope)], xi: &RatVector) -> Result<()> {
    for (indices, q) in families {
        let face = q.support_set(xi)?;
        if face.dim != 0 {
            return Err(Error::NotGeneric {
                pieces: indices.clone(),
                dim: face.dim,
            });
        }
    }
    Ok(())
}

/// Index at `x` from precomputed intersections whose genericity was checked.
pub(crate) fn index_from_families(
    families: &[(Vec<usize>, ConvexPolytope)],
    x: &RatVector,
    xi: &RatVector,
) -> Result<i64> {
    let mut total = 0i64;
    for (indices, q) in families {
        if !q.contains(x) {
            continue;
        }
        let face = q.support_set(xi)?;
        if face.vertices().first() == Some(x) {
            total += if indices.len() % 2 == 1 { 1 } else { -1 };
        }
    }
    Ok(total)
}

/// `i(P, x, ξ)`: inclusion-exclusion of `[x maximizes ⟨ξ, ·⟩ on Q]` over the
/// intersections `Q` of pieces.
pub fn index(p: &Polyhedron, x: &RatVector, xi: &RatVector) -> Result<CurvatureValue> {
    check_point(p, x)?;
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
    let value = index_from_families(&families, x, xi)?;
    Ok(CurvatureValue::new(x, Estimate::exact(value as f64)))
}

struct SignedCone {
    coefficient: i64,
    rays: Vec<(Vec<BigInt>, Vec<f64>)>,
    lineality: Vec<(Vec<BigInt>, Vec<f64>)>,
}

fn with_f64(vs: &[Vec<BigInt>]) -> Vec<(Vec<BigInt>, Vec<f64>)> {
    vs.iter().map(|v| (v.clone(), int_to_f64(v))).collect()
}

/// Sign of `⟨a, u⟩` with a floating filter and an exact fallback.
fn dot_sign(a: &(Vec<BigInt>, Vec<f64>), u: &[f64]) -> std::cmp::Ordering {
    let (d, mag) =
        a.1.iter()
            .zip(u)
            .fold((0.0, 0.0), |(d, m), (x, y)| (d + x * y, m + (x * y).abs()));
    if d.abs() > 1e-9 * mag {
        return d.partial_cmp(&0.0).expect("finite dot product");
    }
    let exact: Rational =
        a.0.iter()
            .zip(u)
            .map(|(x, y)| {
                Rational::from_float(*y).expect("finite sample") * Rational::from_integer(x.clone())
            })
            .sum();
    if exact.is_positive() {
        std::cmp::Ordering::Greater
    } else if exact.is_negative() {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Equal
    }
}

/// `[K ∩ {v : ⟨v, u⟩ ≥ 0} ≠ {o}]`, or `None` when `u` is orthogonal to a generator.
fn meets_halfspace(c: &SignedCone, u: &[f64]) -> Option<bool> {
    let mut hit = false;
    for g in c.lineality.iter().chain(&c.rays) {
        match dot_sign(g, u) {
            std::cmp::Ordering::Equal => return None,
            std::cmp::Ordering::Greater => hit = true,
            std::cmp::Ordering::Less => {}
        }
    }
    Some(hit || !c.lineality.is_empty())
}

/// Euler characteristic of `Tan ∩ {⟨·, u⟩ ≥ 0} ∩ S^{n-1}`, or `None` for a degenerate `u`.
fn halfsphere_chi(cones: &[SignedCone], u: &[f64]) -> Option<i64> {
    let mut chi = 0;
    for c in cones {
        if meets_halfspace(c, u)? {
            chi += c.coefficient;
        }
    }
    Some(chi)
}

const MAX_REDRAWS: u64 = 64;

/// Monte Carlo estimate of `κ(P, x)` for the uniform measure from the
/// halfsphere formula `χ({x} ∩ P) − E_u χ(Tan(P, x) ∩ {⟨·, u⟩ ≥ 0} ∩ S^{n-1})`.
///
/// The Euler characteristic of each sampled set is exact. A direction
/// orthogonal to some generator is redrawn; more than `N / 1000` redraws is an
/// error.
pub fn mc_halfsphere_curvature(
    p: &Polyhedron,
    x: &RatVector,
    mc: &MonteCarloConfig,
) -> Result<CurvatureValue> {
    check_point(p, x)?;
    mc.validate()?;
    let tan = tangent_cone(p, x)?;
    if tan.is_empty() {
        return Ok(CurvatureValue::new(x, Estimate::exact(0.0)));
    }
    let tan = reduced(&tan)?;
    let pieces = tan.pieces();
    Polyhedron::check_cap(pieces.len())?;

    let mut coefficients: HashMap<PolyhedralCone, i64> = HashMap::new();
    let mut stack: Vec<(usize, PolyhedralCone, i64)> = pieces
        .iter()
        .enumerate()
        .map(|(i, c)| (i, c.clone(), 1))
        .collect();
    while let Some((last, c, sign)) = stack.pop() {
        for (j, p) in pieces.iter().enumerate().skip(last + 1) {
            stack.push((j, c.intersect(p)?, -sign));
        }
        *coefficients.entry(c).or_default() += sign;
    }
    let cones: Vec<SignedCone> = coefficients
        .into_iter()
        .filter(|(_, k)| !k.is_zero())
        .map(|(c, k)| SignedCone {
            coefficient: k,
            rays: with_f64(c.int_rays()),
            lineality: with_f64(c.int_lineality()),
        })
        .collect();
    let width: i64 = cones.iter().map(|c| c.coefficient.abs()).sum();

    let n = p.ambient_dim();
    let sampler = SphereSampler::new(n, mc.seed);
    let redraws = AtomicU64::new(0);
    let total = sampler.par_sum(mc.samples, |i, u| {
        if let Some(chi) = halfsphere_chi(&cones, u) {
            return Ok(chi as f64);
        }
        for stream in 1..=MAX_REDRAWS {
            redraws.fetch_add(1, Ordering::Relaxed);
            let v = sampler.with_stream(stream).sample(i);
            if let Some(chi) = halfsphere_chi(&cones, &v) {
                return Ok(chi as f64);
            }
        }
        Err(Error::TooManyResamples {
            resampled: redraws.load(Ordering::Relaxed),
            samples: mc.samples,
        })
    })?;
    let resampled = redraws.into_inner();
    if resampled * 1000 > mc.samples {
        return Err(Error::TooManyResamples {
            resampled,
            samples: mc.samples,
        });
    }
    let mean = total / mc.samples as f64;
    Ok(CurvatureValue::new(
        x,
        Estimate {
            value: 1.0 - mean,
            abs_error: width as f64 * mc.hoeffding_bound(),
        },
    ))
}
