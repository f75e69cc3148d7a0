//! Exact Fourier–Motzkin feasibility for small systems `A·w ≥ b`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Constraint { coeffs, rhs }
    }

    fn value(&self, w: &[BigRational], upto: usize) -> BigRational {
        self.coeffs[..upto].iter().zip(w).map(|(c, x)| c * x).sum()
    }
}

/// Normalizes by the largest nonzero coordinate, merges parallel constraints
/// (keeping the strongest) and drops trivial ones. Returns `None` when a
/// trivial constraint `0 ≥ b` with `b > 0` appears.
fn reduce(constraints: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let mut merged: BTreeMap<Vec<BigRational>, BigRational> = BTreeMap::new();
    for c in constraints {
        let Some(pivot) = c.coeffs.iter().rev().find(|x| !x.is_zero()).map(|x| x.abs()) else {
            if c.rhs.is_positive() {
                return None;
            }
            continue;
        };
        let coeffs: Vec<BigRational> = c.coeffs.iter().map(|x| x / &pivot).collect();
        let rhs = &c.rhs / &pivot;
        merged
            .entry(coeffs)
            .and_modify(|r| {
                if rhs > *r {
                    *r = rhs.clone();
                }
            })
            .or_insert(rhs);
    }
    Some(merged.into_iter().map(|(coeffs, rhs)| Constraint { coeffs, rhs }).collect())
}

/// Returns a rational point satisfying every constraint, or `None`.
pub(crate) fn solve(dim: usize, constraints: Vec<Constraint>) -> Option<Vec<BigRational>> {
    debug_assert!(constraints.iter().all(|c| c.coeffs.len() == dim));
    // systems[v] involves only variables 0..=v.
    let mut systems: Vec<Vec<Constraint>> = vec![Vec::new(); dim];
    let mut current = reduce(constraints)?;
    for v in (0..dim).rev() {
        systems[v] = current.clone();
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in current {
            if c.coeffs[v].is_positive() {
                pos.push(c);
            } else if c.coeffs[v].is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (&p.coeffs[v], -&q.coeffs[v]);
                let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &b + y * a).collect();
                rest.push(Constraint::new(coeffs, &p.rhs * &b + &q.rhs * a));
            }
        }
        current = reduce(rest)?;
    }

    let mut point: Vec<BigRational> = Vec::with_capacity(dim);
    for (v, system) in systems.iter().enumerate() {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for c in system {
            let a = &c.coeffs[v];
            if a.is_zero() {
                continue;
            }
            let bound = (&c.rhs - c.value(&point, v)) / a;
            if a.is_positive() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        let value = match (lo, hi) {
            (Some(l), Some(h)) => {
                debug_assert!(l <= h);
                l
            }
            (Some(l), None) => l,
            (None, Some(h)) => h,
            (None, None) => BigRational::zero(),
        };
        point.push(value);
    }
    Some(point)
}
