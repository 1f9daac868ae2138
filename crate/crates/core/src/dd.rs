//! Double description conversion for homogeneous cones over the integers.
//!
//! Input is `{x : ⟨a, x⟩ ≤ 0 for a in ineqs, ⟨e, x⟩ = 0 for e in eqs}`; output is a
//! lineality basis plus a minimal set of extreme rays (modulo the lineality).
//! Constraints are added one at a time. A lineality direction that is not
//! orthogonal to the new constraint is consumed first; otherwise rays are split
//! by sign and adjacent pairs across the hyperplane are combined. Adjacency uses
//! the combinatorial test on zero sets, which is exact for a minimal generating
//! set of a cone that is pointed modulo its lineality.

use fixedbitset::FixedBitSet;
use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::linalg::{int_dot, make_primitive, IntVec};

#[derive(Clone, Debug, Default)]
pub(crate) struct Generators {
    pub rays: Vec<IntVec>,
    pub lineality: Vec<IntVec>,
}

struct Ray {
    v: IntVec,
    zero: FixedBitSet,
}

fn combine(c1: &BigInt, v1: &[BigInt], c2: &BigInt, v2: &[BigInt]) -> IntVec {
    make_primitive(v1.iter().zip(v2).map(|(a, b)| c1 * a + c2 * b).collect())
}

/// Removes from `v` its component along lineality vector `l` so that ⟨a, ·⟩ vanishes.
fn project_along(v: &[BigInt], l: &[BigInt], a_l: &BigInt, a_v: &BigInt) -> IntVec {
    // v - (a·v / a·l) l, scaled by |a·l| to stay integral and keep v's orientation
    let scale = a_l.abs();
    let coeff = if a_l.is_negative() {
        a_v.clone()
    } else {
        -a_v.clone()
    };
    combine(&scale, v, &coeff, l)
}

pub(crate) fn double_description(dim: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> Generators {
    let mut lineality: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let n_ineq = ineqs.len();

    for e in eqs {
        if e.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(idx) = lineality.iter().position(|l| !int_dot(e, l).is_zero()) {
            let l = lineality.swap_remove(idx);
            let e_l = int_dot(e, &l);
            for m in lineality.iter_mut() {
                let e_m = int_dot(e, m);
                if !e_m.is_zero() {
                    *m = project_along(m, &l, &e_l, &e_m);
                }
            }
            for r in rays.iter_mut() {
                let e_r = int_dot(e, &r.v);
                if !e_r.is_zero() {
                    r.v = project_along(&r.v, &l, &e_l, &e_r);
                }
            }
        } else {
            rays = split_rays(rays, e, None);
        }
    }

    for (k, a) in ineqs.iter().enumerate() {
        if a.iter().all(Zero::is_zero) {
            for r in rays.iter_mut() {
                r.zero.insert(k);
            }
            continue;
        }
        if let Some(idx) = lineality.iter().position(|l| !int_dot(a, l).is_zero()) {
            let l = lineality.swap_remove(idx);
            let a_l = int_dot(a, &l);
            for m in lineality.iter_mut() {
                let a_m = int_dot(a, m);
                if !a_m.is_zero() {
                    *m = project_along(m, &l, &a_l, &a_m);
                }
            }
            for r in rays.iter_mut() {
                let a_r = int_dot(a, &r.v);
                if !a_r.is_zero() {
                    r.v = project_along(&r.v, &l, &a_l, &a_r);
                }
                r.zero.insert(k);
            }
            let new_dir = if a_l.is_negative() {
                l
            } else {
                l.into_iter().map(|x| -x).collect()
            };
            let mut zero = FixedBitSet::with_capacity(n_ineq);
            zero.insert_range(..k);
            rays.push(Ray {
                v: make_primitive(new_dir),
                zero,
            });
        } else {
            rays = split_rays(rays, a, Some(k));
        }
    }

    Generators {
        rays: rays.into_iter().map(|r| r.v).collect(),
        lineality: lineality.into_iter().map(make_primitive).collect(),
    }
}

/// One refinement step. `ineq = Some(k)` keeps the nonpositive side and marks
/// constraint `k` in zero sets; `None` treats `a` as an equality.
fn split_rays(rays: Vec<Ray>, a: &[BigInt], ineq: Option<usize>) -> Vec<Ray> {
    let values: Vec<BigInt> = rays.iter().map(|r| int_dot(a, &r.v)).collect();
    let pos: Vec<usize> = (0..rays.len())
        .filter(|&i| values[i].sign() == Sign::Plus)
        .collect();
    let neg: Vec<usize> = (0..rays.len())
        .filter(|&i| values[i].sign() == Sign::Minus)
        .collect();

    let mut new_rays: Vec<Ray> = Vec::new();
    for &p in &pos {
        for &q in &neg {
            let mut common = rays[p].zero.clone();
            common.intersect_with(&rays[q].zero);
            let adjacent = (0..rays.len())
                .filter(|&r| r != p && r != q)
                .all(|r| !common.is_subset(&rays[r].zero));
            if adjacent {
                // a·(s_p q - s_q p) = 0 with both coefficients positive
                let v = combine(&values[p], &rays[q].v, &-values[q].clone(), &rays[p].v);
                if let Some(k) = ineq {
                    common.insert(k);
                }
                new_rays.push(Ray { v, zero: common });
            }
        }
    }

    let mut out: Vec<Ray> = Vec::with_capacity(rays.len() + new_rays.len());
    for (i, mut r) in rays.into_iter().enumerate() {
        match values[i].sign() {
            Sign::Minus if ineq.is_some() => out.push(r),
            Sign::NoSign => {
                if let Some(k) = ineq {
                    r.zero.insert(k);
                }
                out.push(r);
            }
            _ => {}
        }
    }
    out.extend(new_rays);
    out
}
