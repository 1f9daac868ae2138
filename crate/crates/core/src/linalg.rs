//! Exact rational linear algebra.
//!
//! Every combinatorial decision in the crate (membership, incidence, emptiness,
//! ranks) goes through this module and is made without rounding. Floating point
//! only enters later, when angles are evaluated.

use std::fmt;
use std::ops::{Deref, Index};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Integer vector used internally by the double description kernel.
pub(crate) type IntVec = Vec<BigInt>;

/// Shorthand for building a rational from a pair of machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Serde encoding of a rational as its exact `"p/q"` string.
pub mod rational_serde {
    use super::{parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| D::Error::custom(format!("not a rational: {text:?}")))
    }
}

mod rational_seq {
    use super::{parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|t| {
                parse_rational(&t).ok_or_else(|| D::Error::custom(format!("not a rational: {t:?}")))
            })
            .collect()
    }
}

/// Parses `"3"`, `"-1/3"` or `"0.125"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if all_digits.is_empty() {
        BigInt::zero()
    } else {
        all_digits.parse().ok()?
    };
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

pub(crate) fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator too large for a direct conversion
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// A point or direction with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct RatVector(#[serde(with = "rational_seq")] Vec<Rational>);

impl RatVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RatVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVector(
            coords
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rational) -> RatVector {
        RatVector(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn neg(&self) -> RatVector {
        RatVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(rat_to_f64).collect()
    }

    /// Appends one coordinate; used for homogenization.
    pub(crate) fn extended(&self, last: Rational) -> RatVector {
        let mut coords = self.0.clone();
        coords.push(last);
        RatVector(coords)
    }
}

impl Deref for RatVector {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for RatVector {
    fn from(coords: Vec<Rational>) -> Self {
        RatVector(coords)
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Rectangular matrix stored as rows.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatMatrix {
    rows: Vec<RatVector>,
    cols: usize,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<RatVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, RatVector::dim);
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.dim(),
            });
        }
        Ok(RatMatrix { rows, cols })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows: vec![RatVector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix {
            rows: (0..n).map(|i| RatVector::unit(n, i)).collect(),
            cols: n,
        }
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> RatMatrix {
        let rows = (0..self.cols)
            .map(|j| RatVector(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        RatMatrix {
            rows,
            cols: self.rows.len(),
        }
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

/// Exact rank by fraction-free (Bareiss) elimination.
pub fn rank(m: &RatMatrix) -> usize {
    let rows: Vec<IntVec> = m.rows.iter().map(|r| clear_denominators(r)).collect();
    int_rank(&rows, m.cols)
}

#[allow(clippy::needless_range_loop)]
pub(crate) fn int_rank(rows: &[IntVec], cols: usize) -> usize {
    let mut a: Vec<IntVec> = rows.to_vec();
    let n_rows = a.len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..cols {
        if rank == n_rows {
            break;
        }
        let Some(p) = (rank..n_rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in rank + 1..n_rows {
            let factor = a[r][col].clone();
            for c in col..cols {
                let v = (&pivot * &a[r][c] - &factor * &a[rank][c]) / &prev_pivot;
                a[r][c] = v;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

pub(crate) fn clear_denominators(v: &[Rational]) -> IntVec {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Scales an integer vector so its entries are coprime. Zero stays zero.
pub(crate) fn make_primitive(mut v: IntVec) -> IntVec {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

/// Direction-preserving primitive integer representative of a rational vector.
pub(crate) fn primitive_direction(v: &[Rational]) -> IntVec {
    make_primitive(clear_denominators(v))
}

pub(crate) fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

pub(crate) fn int_rat_dot(a: &[BigInt], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() {
            acc += y * x;
        }
    }
    acc
}

pub(crate) fn int_to_rat(v: &[BigInt]) -> RatVector {
    RatVector(
        v.iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect(),
    )
}

pub(crate) fn int_to_f64(v: &[BigInt]) -> Vec<f64> {
    v.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
}

/// Reduced row echelon basis of the row space; canonical for a given subspace.
#[allow(clippy::needless_range_loop)]
pub fn row_space_basis(rows: &[RatVector], dim: usize) -> Vec<RatVector> {
    let mut a: Vec<Vec<Rational>> = rows.iter().map(|r| r.0.clone()).collect();
    let mut pivot_row = 0;
    for col in 0..dim {
        let Some(p) = (pivot_row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..a.len() {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..dim {
                    let delta = &factor * &a[pivot_row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == a.len() {
            break;
        }
    }
    a.truncate(pivot_row);
    a.into_iter().map(RatVector).collect()
}

/// Basis of {x : ⟨r, x⟩ = 0 for every row r}.
pub fn nullspace(rows: &[RatVector], dim: usize) -> Vec<RatVector> {
    let rref = row_space_basis(rows, dim);
    let pivots: Vec<usize> = rref
        .iter()
        .map(|r| {
            r.iter()
                .position(|x| !x.is_zero())
                .expect("rref rows are nonzero")
        })
        .collect();
    (0..dim)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = RatVector::zeros(dim);
            v.0[free] = Rational::one();
            for (row, &p) in rref.iter().zip(&pivots) {
                v.0[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`.
#[allow(clippy::needless_range_loop)]
pub fn project_out(v: &RatVector, basis: &[RatVector]) -> RatVector {
    if basis.is_empty() {
        return v.clone();
    }
    let k = basis.len();
    // Solve (B Bᵀ) c = B v, then v - Bᵀ c.
    let mut system: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            let mut row: Vec<Rational> = (0..k).map(|j| basis[i].dot(&basis[j])).collect();
            row.push(basis[i].dot(v));
            row
        })
        .collect();
    for col in 0..k {
        let p = (col..k)
            .find(|&r| !system[r][col].is_zero())
            .expect("basis must be independent");
        system.swap(col, p);
        let inv = system[col][col].recip();
        for x in system[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..k {
            if r != col && !system[r][col].is_zero() {
                let factor = system[r][col].clone();
                for c in col..=k {
                    let delta = &factor * &system[col][c];
                    system[r][c] -= delta;
                }
            }
        }
    }
    let mut out = v.clone();
    for (i, b) in basis.iter().enumerate() {
        let c = &system[i][k];
        if !c.is_zero() {
            out = out.sub(&b.scale(c));
        }
    }
    out
}

/// Base point and direction basis of the affine hull of `points`.
pub fn affine_hull(points: &[RatVector]) -> Result<(RatVector, Vec<RatVector>)> {
    let base = points.first().ok_or(Error::EmptyPointSet)?.clone();
    check_dims(points, base.dim())?;
    let diffs: Vec<RatVector> = points[1..].iter().map(|p| p.sub(&base)).collect();
    let basis = row_space_basis(&diffs, base.dim());
    Ok((base, basis))
}

pub(crate) fn affine_dim(points: &[RatVector]) -> usize {
    match points.split_first() {
        None => 0,
        Some((base, rest)) => {
            let diffs: Vec<IntVec> = rest
                .iter()
                .map(|p| clear_denominators(&p.sub(base)))
                .collect();
            int_rank(&diffs, base.dim())
        }
    }
}

pub(crate) fn check_dims(points: &[RatVector], dim: usize) -> Result<()> {
    match points.iter().find(|p| p.dim() != dim) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        }),
        None => Ok(()),
    }
}

/// Relation of a linear constraint `⟨a, x⟩ rel b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Le,
    Lt,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: RatVector,
    pub rhs: Rational,
    pub relation: Relation,
}

impl Constraint {
    pub fn new(coeffs: RatVector, rhs: Rational, relation: Relation) -> Self {
        Constraint {
            coeffs,
            rhs,
            relation,
        }
    }

    pub fn is_satisfied_by(&self, x: &RatVector) -> bool {
        let lhs = self.coeffs.dot(x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Lt => lhs < self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// One inequality over a prefix of the variables during elimination.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Ineq {
    coeffs: Vec<Rational>,
    rhs: Rational,
    strict: bool,
}

impl Ineq {
    /// Scales so the last nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self
            .coeffs
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .map(Signed::abs)
        {
            let inv = lead.recip();
            for c in self.coeffs.iter_mut() {
                *c *= &inv;
            }
            self.rhs *= &inv;
        }
        self
    }
}

/// Exact feasibility of a system of linear constraints.
///
/// Returns a witness satisfying every constraint exactly, or `None` when the
/// system is infeasible. Equalities are eliminated by substitution and the
/// remaining inequalities by Fourier–Motzkin, which is adequate for the small
/// dimensions this crate works in. When zero is a feasible choice for a
/// coordinate during back-substitution it is preferred.
pub fn lp_feasible(constraints: &[Constraint]) -> Result<Option<RatVector>> {
    let Some(first) = constraints.first() else {
        return Ok(Some(RatVector::zeros(0)));
    };
    let n = first.coeffs.dim();
    if let Some(bad) = constraints.iter().find(|c| c.coeffs.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.coeffs.dim(),
        });
    }

    // Eliminate equalities: x_pivot = (rhs - Σ other) / a_pivot.
    let mut substitutions: Vec<(usize, Vec<Rational>, Rational)> = Vec::new();
    let mut ineqs: Vec<Ineq> = Vec::new();
    let mut eqs: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for c in constraints {
        match c.relation {
            Relation::Eq => eqs.push((c.coeffs.0.clone(), c.rhs.clone())),
            Relation::Le | Relation::Lt => ineqs.push(Ineq {
                coeffs: c.coeffs.0.clone(),
                rhs: c.rhs.clone(),
                strict: c.relation == Relation::Lt,
            }),
        }
    }
    while let Some((coeffs, rhs)) = eqs.pop() {
        let Some(pivot) = coeffs.iter().rposition(|c| !c.is_zero()) else {
            if rhs.is_zero() {
                continue;
            }
            return Ok(None);
        };
        let inv = coeffs[pivot].recip();
        let expr: Vec<Rational> = coeffs.iter().map(|c| c * &inv).collect();
        let value = &rhs * &inv;
        let substitute = |row: &mut Vec<Rational>, r: &mut Rational| {
            let f = row[pivot].clone();
            if !f.is_zero() {
                for (x, e) in row.iter_mut().zip(&expr) {
                    *x -= &f * e;
                }
                *r -= &f * &value;
            }
        };
        for (row, r) in eqs.iter_mut() {
            substitute(row, r);
        }
        for ineq in ineqs.iter_mut() {
            substitute(&mut ineq.coeffs, &mut ineq.rhs);
        }
        substitutions.push((pivot, expr, value));
    }

    // Fourier–Motzkin from the last variable down, remembering each stage.
    let mut stages: Vec<Vec<Ineq>> = Vec::with_capacity(n);
    let mut current: Vec<Ineq> = dedup_ineqs(ineqs);
    for var in (0..n).rev() {
        stages.push(current.clone());
        let (mut keep, mut upper, mut lower) = (Vec::new(), Vec::new(), Vec::new());
        for q in current {
            if q.coeffs[var].is_positive() {
                upper.push(q);
            } else if q.coeffs[var].is_negative() {
                lower.push(q);
            } else {
                keep.push(q);
            }
        }
        for u in &upper {
            for l in &lower {
                let cu = u.coeffs[var].clone();
                let cl = -l.coeffs[var].clone();
                let coeffs: Vec<Rational> = u
                    .coeffs
                    .iter()
                    .zip(&l.coeffs)
                    .map(|(a, b)| a * &cl + b * &cu)
                    .collect();
                keep.push(Ineq {
                    coeffs,
                    rhs: &u.rhs * &cl + &l.rhs * &cu,
                    strict: u.strict || l.strict,
                });
            }
        }
        current = dedup_ineqs(keep);
    }
    // All variables eliminated: remaining rows read 0 (<|≤) rhs.
    if current.iter().any(|q| {
        if q.strict {
            !q.rhs.is_positive()
        } else {
            q.rhs.is_negative()
        }
    }) {
        return Ok(None);
    }

    let mut x = vec![Rational::zero(); n];
    for (stage, var) in stages.iter().rev().zip(0..n) {
        x[var] = choose_value(stage, var, &x)?;
    }
    // Equality-pivot variables were free during elimination; fix them now.
    for (pivot, expr, value) in substitutions.iter().rev() {
        let mut v = value.clone();
        for (j, e) in expr.iter().enumerate() {
            if j != *pivot {
                v -= e * &x[j];
            }
        }
        x[*pivot] = v;
    }
    let witness = RatVector(x);
    debug_assert!(constraints.iter().all(|c| c.is_satisfied_by(&witness)));
    Ok(Some(witness))
}

fn dedup_ineqs(rows: Vec<Ineq>) -> Vec<Ineq> {
    let mut out: Vec<Ineq> = Vec::with_capacity(rows.len());
    for q in rows.into_iter().map(Ineq::normalized) {
        if q.coeffs.iter().all(Zero::is_zero) {
            // keep only the infeasible trivial rows
            let violated = if q.strict {
                !q.rhs.is_positive()
            } else {
                q.rhs.is_negative()
            };
            if violated {
                out.push(q);
            }
            continue;
        }
        match out.iter_mut().find(|o| o.coeffs == q.coeffs) {
            Some(o) => {
                if q.rhs < o.rhs || (q.rhs == o.rhs && q.strict) {
                    *o = q;
                }
            }
            None => out.push(q),
        }
    }
    out
}

/// Picks a value for `var` consistent with the rows of `stage`, given earlier coordinates.
fn choose_value(stage: &[Ineq], var: usize, x: &[Rational]) -> Result<Rational> {
    let mut lower: Option<(Rational, bool)> = None;
    let mut upper: Option<(Rational, bool)> = None;
    for q in stage {
        let c = &q.coeffs[var];
        if c.is_zero() {
            continue;
        }
        let mut rest = q.rhs.clone();
        for (a, xj) in q.coeffs[..var].iter().zip(x.iter()) {
            rest -= a * xj;
        }
        let bound = rest / c;
        if c.is_positive() {
            let tighter = match &upper {
                None => true,
                Some((u, s)) => bound < *u || (bound == *u && q.strict && !s),
            };
            if tighter {
                upper = Some((bound, q.strict));
            }
        } else {
            let tighter = match &lower {
                None => true,
                Some((l, s)) => bound > *l || (bound == *l && q.strict && !s),
            };
            if tighter {
                lower = Some((bound, q.strict));
            }
        }
    }
    let fits = |v: &Rational| {
        lower
            .as_ref()
            .is_none_or(|(l, s)| if *s { v > l } else { v >= l })
            && upper
                .as_ref()
                .is_none_or(|(u, s)| if *s { v < u } else { v <= u })
    };
    let mut candidates = vec![Rational::zero()];
    match (&lower, &upper) {
        (Some((l, _)), Some((u, _))) => {
            candidates.push(l.clone());
            candidates.push(u.clone());
            candidates.push((l + u) / Rational::from_integer(2.into()));
        }
        (Some((l, _)), None) => {
            candidates.push(l.clone());
            candidates.push(l + Rational::one());
        }
        (None, Some((u, _))) => {
            candidates.push(u.clone());
            candidates.push(u - Rational::one());
        }
        (None, None) => {}
    }
    candidates
        .into_iter()
        .find(fits)
        .ok_or(Error::Internal("back-substitution found an empty interval"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| RatVector::from_ints(r)).collect()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::identity(2)), 2);
        assert_eq!(rank(&RatMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1/3"), Some(rat(1, 3)));
        assert_eq!(parse_rational("-0.125"), Some(rat(-1, 8)));
        assert_eq!(parse_rational("7"), Some(rat(7, 1)));
        assert_eq!(parse_rational("2.5e1"), Some(rat(25, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
    }

    #[test]
    fn affine_hull_examples() {
        let (base, basis) = affine_hull(&[RatVector::from_ints(&[0, 0])]).unwrap();
        assert_eq!(base, RatVector::from_ints(&[0, 0]));
        assert!(basis.is_empty());

        let pts: Vec<_> = [[0, 0], [1, 0], [2, 0]]
            .iter()
            .map(|p| RatVector::from_ints(p))
            .collect();
        let (_, basis) = affine_hull(&pts).unwrap();
        assert_eq!(basis, vec![RatVector::from_ints(&[1, 0])]);

        let sq: Vec<_> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|p| RatVector::from_ints(p))
            .collect();
        assert_eq!(affine_hull(&sq).unwrap().1.len(), 2);

        assert!(matches!(affine_hull(&[]), Err(Error::EmptyPointSet)));
    }

    #[test]
    fn nullspace_and_projection() {
        let rows = vec![RatVector::from_ints(&[1, 1, 0])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(v.dot(&rows[0]).is_zero());
        }
        let p = project_out(&RatVector::from_ints(&[2, 0, 5]), &rows);
        assert_eq!(p, RatVector::from_ints(&[1, -1, 5]));
    }

    fn c(coeffs: &[i64], rhs: i64, relation: Relation) -> Constraint {
        Constraint::new(RatVector::from_ints(coeffs), rat(rhs, 1), relation)
    }

    #[test]
    fn lp_examples() {
        assert_eq!(
            lp_feasible(&[c(&[1], 1, Relation::Le), c(&[-1], -2, Relation::Le)]).unwrap(),
            None
        );
        assert_eq!(
            lp_feasible(&[c(&[1], 1, Relation::Le)]).unwrap(),
            Some(RatVector::from_ints(&[0]))
        );
        assert_eq!(
            lp_feasible(&[c(&[1], 1, Relation::Eq), c(&[1], 1, Relation::Le)]).unwrap(),
            Some(RatVector::from_ints(&[1]))
        );
    }

    #[test]
    fn lp_strictness() {
        // 0 < x < 1 is feasible, 1 < x ≤ 1 is not
        let w = lp_feasible(&[c(&[-1], 0, Relation::Lt), c(&[1], 1, Relation::Lt)])
            .unwrap()
            .unwrap();
        assert_eq!(w, RatVector::new(vec![rat(1, 2)]));
        assert_eq!(
            lp_feasible(&[c(&[-1], -1, Relation::Lt), c(&[1], 1, Relation::Le)]).unwrap(),
            None
        );
    }

    #[test]
    fn lp_dimension_mismatch() {
        let err =
            lp_feasible(&[c(&[1], 1, Relation::Le), c(&[1, 0], 1, Relation::Le)]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn lp_triangle_with_equality() {
        // x + y = 1, x ≥ 0, y ≥ 0, x < 1/4
        let w = lp_feasible(&[
            c(&[1, 1], 1, Relation::Eq),
            c(&[-1, 0], 0, Relation::Le),
            c(&[0, -1], 0, Relation::Le),
            Constraint::new(RatVector::from_ints(&[1, 0]), rat(1, 4), Relation::Lt),
        ])
        .unwrap()
        .unwrap();
        assert_eq!(&w[0] + &w[1], rat(1, 1));
        assert!(w[0] < rat(1, 4));
    }
}
