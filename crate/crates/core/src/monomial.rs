//! Monomials over `x0 < x1 < … < xn`, elementary moves and the Borel order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector `(α0, …, αn)`.
///
/// [`Ord`] is the canonical storage order: lower degree first, then the
/// lexicographic order that compares `xn` first and puts larger exponents
/// first. Within one degree this is a linear extension of the Borel order,
/// Borel-greater monomials coming first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptyRing);
        }
        Ok(Monomial { exps })
    }

    pub(crate) fn from_vec(exps: Vec<u32>) -> Self {
        debug_assert!(!exps.is_empty());
        Monomial { exps }
    }

    pub fn one(arity: usize) -> Self {
        Monomial::from_vec(vec![0; arity])
    }

    /// `x_index^exp` in a ring with `arity` variables.
    pub fn var_power(arity: usize, index: usize, exp: u32) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = exp;
        Monomial::from_vec(exps)
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Smallest index of a variable dividing the monomial. The constant
    /// monomial is assigned the largest index.
    pub fn min_index(&self) -> usize {
        self.exps.iter().position(|&e| e > 0).unwrap_or(self.exps.len() - 1)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.arity() {
            return Err(Error::IndexOutOfRange { index: i, arity: self.arity() });
        }
        Ok(())
    }

    /// `x_{i+1}/x_i · m`; `Ok(None)` when `x_i` does not divide `m`.
    pub fn increasing_move(&self, i: usize) -> Result<Option<Monomial>> {
        self.check_index(i + 1)?;
        Ok(self.shift_exponent(i, i + 1))
    }

    /// `x_{j-1}/x_j · m`; `Ok(None)` when `x_j` does not divide `m`.
    pub fn decreasing_move(&self, j: usize) -> Result<Option<Monomial>> {
        self.check_index(j)?;
        if j == 0 {
            return Err(Error::IndexOutOfRange { index: 0, arity: self.arity() });
        }
        Ok(self.shift_exponent(j, j - 1))
    }

    pub(crate) fn shift_exponent(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exps[from] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[from] -= 1;
        exps[to] += 1;
        Some(Monomial { exps })
    }

    /// All admissible increasing moves.
    pub fn upper_covers(&self) -> impl Iterator<Item = Monomial> + '_ {
        (0..self.arity() - 1).filter_map(|i| self.shift_exponent(i, i + 1))
    }

    /// All admissible decreasing moves.
    pub fn lower_covers(&self) -> impl Iterator<Item = Monomial> + '_ {
        (1..self.arity()).filter_map(|j| self.shift_exponent(j, j - 1))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.arity() == other.arity() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// Drops every power of `x0`.
    pub fn strip_first(&self) -> Monomial {
        let mut exps = self.exps.clone();
        exps[0] = 0;
        Monomial { exps }
    }

    /// Inserts a new smallest variable with exponent `exp`.
    pub(crate) fn prepend(&self, exp: u32) -> Monomial {
        let mut exps = Vec::with_capacity(self.arity() + 1);
        exps.push(exp);
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    /// Dot product with a weight vector.
    pub fn weight(&self, w: &[u64]) -> u128 {
        self.exps.iter().zip(w).map(|(&e, &wi)| e as u128 * wi as u128).sum()
    }

    /// All monomials of degree `degree` in `arity` variables, canonically sorted.
    pub fn all_of_degree(arity: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; arity];
        fill_from_top(&mut exps, arity - 1, degree, &mut out);
        out
    }
}

// Walks exponents from xn down so the output is already in canonical order.
fn fill_from_top(exps: &mut [u32], i: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if i == 0 {
        exps[0] = remaining;
        out.push(Monomial { exps: exps.to_vec() });
        exps[0] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[i] = e;
        fill_from_top(exps, i - 1, remaining - e, out);
    }
    exps[i] = 0;
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.iter().rev().cmp(self.exps.iter().rev()))
            .then_with(|| self.exps.len().cmp(&other.exps.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::VariableNames::default_for(self.arity()).monomial(self))
    }
}

/// `b ≥_B a`: `a` is reachable from `b` by decreasing elementary moves.
///
/// Uses the suffix-sum criterion `Σ_{j≥i} b_j ≥ Σ_{j≥i} a_j` for all `i`.
pub fn borel_leq(a: &Monomial, b: &Monomial) -> Result<bool> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch { expected: a.arity(), got: b.arity() });
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { expected: a.degree(), got: b.degree() });
    }
    Ok(borel_leq_unchecked(a, b))
}

pub(crate) fn borel_leq_unchecked(a: &Monomial, b: &Monomial) -> bool {
    let (mut sa, mut sb) = (0u32, 0u32);
    for (ea, eb) in a.exps.iter().zip(&b.exps).rev() {
        sa += ea;
        sb += eb;
        if sb < sa {
            return false;
        }
    }
    true
}
