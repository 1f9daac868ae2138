//! Spherical measures of polyhedral cones.
//!
//! All values are fractions of the whole sphere, so the outer angles of a
//! polytope sum to one. A full-dimensional cone `L + K` with lineality `L` has
//! the same solid angle as its pointed part `K` inside `L⊥`, which is what the
//! exact paths use:
//!
//! | dim `L⊥` | method                                            |
//! |----------|---------------------------------------------------|
//! | 0        | whole sphere, 1                                    |
//! | 1        | half sphere, 1/2                                   |
//! | 2        | planar angle between the two rays over `2π`        |
//! | 3        | Girard excess of the spherical polygon over `4π`   |
//! | ≥ 4      | Monte Carlo with a Hoeffding bound                 |
//!
//! Cones that are not full-dimensional have measure exactly zero.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::linalg::int_to_f64;

/// How an [`AngleEstimate`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Method {
    ExactLowDim,
    SimpleZero,
    MonteCarlo {
        samples: u64,
        seed: u64,
        confidence: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngleEstimate {
    pub value: f64,
    pub abs_error: f64,
    pub method: Method,
}

impl AngleEstimate {
    pub fn exact(value: f64) -> Self {
        AngleEstimate {
            value,
            abs_error: 0.0,
            method: Method::ExactLowDim,
        }
    }

    pub fn simple_zero() -> Self {
        AngleEstimate {
            value: 0.0,
            abs_error: 0.0,
            method: Method::SimpleZero,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self.method, Method::MonteCarlo { .. })
    }

    /// Whether `target` lies within the attached error bound plus `slack`.
    pub fn agrees_with(&self, target: f64, slack: f64) -> bool {
        (self.value - target).abs() <= self.abs_error + slack
    }
}

/// Sample count, seed and confidence `1 - δ` for Monte Carlo estimates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloConfig {
    pub samples: u64,
    pub seed: u64,
    pub confidence: f64,
}

impl Default for MonteCarloConfig {
    fn default() -> Self {
        MonteCarloConfig {
            samples: 100_000,
            seed: 0,
            confidence: 1.0 - 1e-6,
        }
    }
}

impl MonteCarloConfig {
    pub fn new(samples: u64, seed: u64, confidence: f64) -> Self {
        MonteCarloConfig {
            samples,
            seed,
            confidence,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidMonteCarlo(
                "sample count must be at least 1".into(),
            ));
        }
        if !(self.confidence > 0.0 && self.confidence < 1.0) {
            return Err(Error::InvalidMonteCarlo(format!(
                "confidence {} not in (0, 1)",
                self.confidence
            )));
        }
        Ok(())
    }

    /// Hoeffding half-width `sqrt(ln(2/δ) / 2N)` for a variable with range one.
    pub fn hoeffding_bound(&self) -> f64 {
        let delta = 1.0 - self.confidence;
        ((2.0 / delta).ln() / (2.0 * self.samples as f64)).sqrt()
    }

    fn method(&self) -> Method {
        Method::MonteCarlo {
            samples: self.samples,
            seed: self.seed,
            confidence: self.confidence,
        }
    }
}

const CHUNK: u64 = 8192;

/// Uniform directions on `S^{n-1}` where sample `i` depends only on `(seed, i)`.
///
/// Each sample consumes a fixed number of ChaCha8 words (Box-Muller pairs), so
/// sample `i` starts at word `i * words_per_sample` and any chunking of the
/// index range reproduces the same sequence.
#[derive(Clone, Copy, Debug)]
pub struct SphereSampler {
    dim: usize,
    seed: u64,
    stream: u64,
}

impl SphereSampler {
    pub fn new(dim: usize, seed: u64) -> Self {
        SphereSampler {
            dim,
            seed,
            stream: 0,
        }
    }

    /// Independent sequence under the same seed, used for redraws.
    pub fn with_stream(self, stream: u64) -> Self {
        SphereSampler { stream, ..self }
    }

    fn words_per_sample(&self) -> u128 {
        // two u64 draws per Box-Muller pair, two 32-bit words per u64
        4 * self.dim.div_ceil(2) as u128
    }

    fn rng_at(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng.set_word_pos(index as u128 * self.words_per_sample());
        rng
    }

    fn draw(rng: &mut ChaCha8Rng, out: &mut [f64]) {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        for pair in out.chunks_mut(2) {
            let u1 = 1.0 - (rng.next_u64() >> 11) as f64 * SCALE;
            let u2 = (rng.next_u64() >> 11) as f64 * SCALE;
            let r = (-2.0 * u1.ln()).sqrt();
            let (s, c) = (2.0 * PI * u2).sin_cos();
            pair[0] = r * c;
            if pair.len() > 1 {
                pair[1] = r * s;
            }
        }
        let norm = out.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            out.iter_mut().for_each(|x| *x /= norm);
        }
    }

    /// Sample `index` as a unit vector.
    pub fn sample(&self, index: u64) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        Self::draw(&mut self.rng_at(index), &mut out);
        out
    }

    /// Visits samples `start..end` in order.
    pub fn for_each_in(&self, start: u64, end: u64, mut f: impl FnMut(u64, &[f64])) {
        let mut rng = self.rng_at(start);
        let mut buf = vec![0.0; self.dim];
        for i in start..end {
            Self::draw(&mut rng, &mut buf);
            f(i, &buf);
        }
    }

    /// Sum of `f` over samples `0..n`, evaluated in fixed-size chunks in
    /// parallel and merged in chunk order, so the result is reproducible.
    pub fn par_sum<F>(&self, n: u64, f: F) -> Result<f64>
    where
        F: Fn(u64, &[f64]) -> Result<f64> + Sync,
    {
        let chunks: Vec<u64> = (0..n.div_ceil(CHUNK)).collect();
        let partial: Vec<f64> = chunks
            .par_iter()
            .map(|&c| {
                let start = c * CHUNK;
                let end = (start + CHUNK).min(n);
                let mut acc = 0.0;
                let mut err = None;
                self.for_each_in(start, end, |i, u| {
                    if err.is_none() {
                        match f(i, u) {
                            Ok(v) => acc += v,
                            Err(e) => err = Some(e),
                        }
                    }
                });
                match err {
                    Some(e) => Err(e),
                    None => Ok(acc),
                }
            })
            .collect::<Result<Vec<f64>>>()?;
        Ok(partial.iter().sum())
    }

    pub fn par_count<F>(&self, n: u64, f: F) -> u64
    where
        F: Fn(&[f64]) -> bool + Sync,
    {
        let chunks: Vec<u64> = (0..n.div_ceil(CHUNK)).collect();
        chunks
            .par_iter()
            .map(|&c| {
                let start = c * CHUNK;
                let end = (start + CHUNK).min(n);
                let mut hits = 0u64;
                self.for_each_in(start, end, |_, u| hits += f(u) as u64);
                hits
            })
            .sum()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Angle in `[0, π]` between two vectors, from dot products only.
fn angle_between(a: &[f64], b: &[f64]) -> f64 {
    let ab = dot(a, b);
    let cross = (dot(a, a) * dot(b, b) - ab * ab).max(0.0).sqrt();
    cross.atan2(ab)
}

pub(crate) fn in_cone_f64(c: &PolyhedralCone, u: &[f64]) -> bool {
    c.facets_f64().iter().all(|a| dot(a, u) <= 0.0)
}

/// Girard excess of the pointed part of a cone whose lineality complement is 3-dimensional.
fn girard_fraction(c: &PolyhedralCone) -> Result<f64> {
    let rays: Vec<Vec<f64>> = c.int_rays().iter().map(|r| int_to_f64(r)).collect();
    let k = rays.len();
    if k < 3 {
        return Err(Error::Internal(
            "pointed 3-dimensional cone with fewer than 3 rays",
        ));
    }
    // Rays sharing a facet are consecutive corners of the spherical polygon.
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); k];
    for a in c.int_facets() {
        let on: Vec<usize> = (0..k)
            .filter(|&i| crate::linalg::int_dot(a, &c.int_rays()[i]) == num_bigint::BigInt::from(0))
            .collect();
        if on.len() != 2 {
            return Err(Error::Internal(
                "facet of a pointed 3-dimensional cone must hold two rays",
            ));
        }
        neighbours[on[0]].push(on[1]);
        neighbours[on[1]].push(on[0]);
    }
    let mut order = vec![0usize];
    let mut prev = usize::MAX;
    let mut cur = 0usize;
    while order.len() < k {
        let next = *neighbours[cur]
            .iter()
            .find(|&&m| m != prev && !order.contains(&m))
            .ok_or(Error::Internal(
                "facet graph of a 3-dimensional cone is not a cycle",
            ))?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    let unit: Vec<Vec<f64>> = rays
        .iter()
        .map(|r| {
            let n = dot(r, r).sqrt();
            r.iter().map(|x| x / n).collect()
        })
        .collect();
    let tangent = |at: &[f64], towards: &[f64]| -> Vec<f64> {
        let d = dot(at, towards);
        towards.iter().zip(at).map(|(t, a)| t - d * a).collect()
    };
    let mut angle_sum = 0.0;
    for i in 0..k {
        let v = &unit[order[i]];
        let u = &unit[order[(i + k - 1) % k]];
        let w = &unit[order[(i + 1) % k]];
        angle_sum += angle_between(&tangent(v, u), &tangent(v, w));
    }
    let excess = angle_sum - (k as f64 - 2.0) * PI;
    Ok(excess / (4.0 * PI))
}

/// `σ(C ∩ S^{n-1})` with the default Monte Carlo settings.
pub fn solid_angle(c: &PolyhedralCone) -> Result<AngleEstimate> {
    solid_angle_with(c, &MonteCarloConfig::default())
}

pub fn solid_angle_with(c: &PolyhedralCone, mc: &MonteCarloConfig) -> Result<AngleEstimate> {
    let n = c.ambient_dim();
    if c.dim() < n {
        return Ok(AngleEstimate::simple_zero());
    }
    match n - c.lineality_dim() {
        0 => Ok(AngleEstimate::exact(1.0)),
        1 => Ok(AngleEstimate::exact(0.5)),
        2 => {
            let rays = c.int_rays();
            if rays.len() != 2 {
                return Err(Error::Internal(
                    "pointed 2-dimensional cone must have two rays",
                ));
            }
            let theta = angle_between(&int_to_f64(&rays[0]), &int_to_f64(&rays[1]));
            Ok(AngleEstimate::exact(theta / (2.0 * PI)))
        }
        3 => Ok(AngleEstimate::exact(girard_fraction(c)?)),
        _ => {
            mc.validate()?;
            let sampler = SphereSampler::new(n, mc.seed);
            let hits = sampler.par_count(mc.samples, |u| in_cone_f64(c, u));
            Ok(AngleEstimate {
                value: hits as f64 / mc.samples as f64,
                abs_error: mc.hoeffding_bound(),
                method: mc.method(),
            })
        }
    }
}

/// Outer angle `Γ(C) = σ(C° ∩ S^{n-1})`.
pub fn outer_angle(c: &PolyhedralCone) -> Result<AngleEstimate> {
    solid_angle(&c.dual())
}

pub fn outer_angle_with(c: &PolyhedralCone, mc: &MonteCarloConfig) -> Result<AngleEstimate> {
    solid_angle_with(&c.dual(), mc)
}

/// Density on unit vectors, relative to the uniform probability measure.
pub type DensityFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Probability measure on the unit sphere given by a density against `σ`.
///
/// `normalized` and `vanishes_on_great_subspheres` are declarations by the
/// caller; they are not verified.
#[derive(Clone)]
pub struct DensityMeasure {
    pub name: String,
    pub density: DensityFn,
    /// Upper bound for the density, used in the error bound.
    pub sup: f64,
    pub normalized: bool,
    pub vanishes_on_great_subspheres: bool,
}

impl fmt::Debug for DensityMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DensityMeasure")
            .field("name", &self.name)
            .field("sup", &self.sup)
            .field("normalized", &self.normalized)
            .field(
                "vanishes_on_great_subspheres",
                &self.vanishes_on_great_subspheres,
            )
            .finish()
    }
}

/// One monomial `coefficient · Π uᵢ^{exponents[i]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Monomial {
    pub coefficient: f64,
    pub exponents: Vec<u32>,
}

/// Polynomial in the coordinates of a unit vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolynomialDensity {
    pub terms: Vec<Monomial>,
}

impl PolynomialDensity {
    pub fn eval(&self, u: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                t.coefficient
                    * t.exponents
                        .iter()
                        .zip(u)
                        .map(|(&e, x)| x.powi(e as i32))
                        .product::<f64>()
            })
            .sum()
    }
}

#[derive(Clone, Debug)]
pub enum SphereMeasure {
    Uniform,
    Density(DensityMeasure),
}

impl SphereMeasure {
    pub fn density(
        name: impl Into<String>,
        density: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        sup: f64,
    ) -> Self {
        SphereMeasure::Density(DensityMeasure {
            name: name.into(),
            density: Arc::new(density),
            sup,
            normalized: true,
            vanishes_on_great_subspheres: true,
        })
    }

    pub fn polynomial(name: impl Into<String>, poly: PolynomialDensity, sup: f64) -> Self {
        Self::density(name, move |u| poly.eval(u), sup)
    }

    pub fn name(&self) -> &str {
        match self {
            SphereMeasure::Uniform => "uniform",
            SphereMeasure::Density(d) => &d.name,
        }
    }

    pub fn is_normalized(&self) -> bool {
        match self {
            SphereMeasure::Uniform => true,
            SphereMeasure::Density(d) => d.normalized,
        }
    }

    pub fn vanishes_on_great_subspheres(&self) -> bool {
        match self {
            SphereMeasure::Uniform => true,
            SphereMeasure::Density(d) => d.vanishes_on_great_subspheres,
        }
    }
}

/// `μ(C ∩ S^{n-1})`.
pub fn measure_of_cone(
    mu: &SphereMeasure,
    c: &PolyhedralCone,
    mc: &MonteCarloConfig,
) -> Result<AngleEstimate> {
    let d = match mu {
        SphereMeasure::Uniform => return solid_angle_with(c, mc),
        SphereMeasure::Density(d) => d,
    };
    let n = c.ambient_dim();
    if d.vanishes_on_great_subspheres && c.dim() < n {
        return Ok(AngleEstimate::simple_zero());
    }
    if d.normalized && c.is_full_space() {
        return Ok(AngleEstimate::exact(1.0));
    }
    mc.validate()?;
    let sampler = SphereSampler::new(n, mc.seed);
    let sup = d.sup;
    let total = sampler.par_sum(mc.samples, |_, u| {
        let value = (d.density)(u);
        if value < 0.0 {
            return Err(Error::NegativeDensity { value });
        }
        if value > sup {
            return Err(Error::InvalidMonteCarlo(format!(
                "density {value} exceeds declared bound {sup}"
            )));
        }
        Ok(if in_cone_f64(c, u) { value } else { 0.0 })
    })?;
    Ok(AngleEstimate {
        value: total / mc.samples as f64,
        abs_error: sup * mc.hoeffding_bound(),
        method: mc.method(),
    })
}
