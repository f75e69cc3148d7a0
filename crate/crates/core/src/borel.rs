//! Borel sets and strongly stable ideals.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hilbert::GrowthVector;
use crate::monomial::Monomial;
use crate::numpoly::NumPoly;

/// A set of degree-`s` monomials closed under admissible increasing moves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorelSet {
    arity: usize,
    degree: u32,
    members: Vec<Monomial>,
}

impl BorelSet {
    /// Validates closure; `members` may be given in any order.
    pub fn new(arity: usize, degree: u32, members: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let set = Self::from_members_unchecked(arity, degree, members)?;
        let lookup: HashSet<&Monomial> = set.members.iter().collect();
        for m in &set.members {
            if m.upper_covers().any(|u| !lookup.contains(&u)) {
                return Err(Error::NotStronglyStable);
            }
        }
        Ok(set)
    }

    fn from_members_unchecked(
        arity: usize,
        degree: u32,
        members: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self> {
        if arity == 0 {
            return Err(Error::EmptyRing);
        }
        let members: BTreeSet<Monomial> = members.into_iter().collect();
        for m in &members {
            if m.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, got: m.arity() });
            }
            if m.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: m.degree() });
            }
        }
        Ok(BorelSet { arity, degree, members: members.into_iter().collect() })
    }

    /// Callers guarantee closure, matching degree and arity, canonical order.
    pub(crate) fn from_sorted(arity: usize, degree: u32, members: Vec<Monomial>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        BorelSet { arity, degree, members }
    }

    /// The smallest Borel set containing `seed`.
    pub fn closure(arity: usize, degree: u32, seed: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let seed = Self::from_members_unchecked(arity, degree, seed)?;
        let mut seen: HashSet<Monomial> = seed.members.iter().cloned().collect();
        let mut queue: VecDeque<Monomial> = seed.members.into_iter().collect();
        while let Some(m) = queue.pop_front() {
            for up in m.upper_covers() {
                if seen.insert(up.clone()) {
                    queue.push_back(up);
                }
            }
        }
        let mut members: Vec<Monomial> = seen.into_iter().collect();
        members.sort();
        Ok(BorelSet { arity, degree, members })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.binary_search(m).is_ok()
    }

    /// Sizes of the classes `B^(i) = { m ∈ B : min m = i }`.
    pub fn growth_vector(&self) -> GrowthVector {
        let mut counts = vec![0u64; self.arity];
        for m in &self.members {
            counts[m.min_index()] += 1;
        }
        GrowthVector::new(counts)
    }

    /// Degree-`s` monomials outside the set, canonically sorted.
    pub fn complement(&self) -> Vec<Monomial> {
        Monomial::all_of_degree(self.arity, self.degree)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// Hilbert polynomial of the ideal generated by the set:
    /// `C(n+t, n) - Σ_k |B^(k)| C(k+t-s, k)`.
    pub fn hilbert_polynomial(&self) -> NumPoly {
        let n = self.arity - 1;
        let s = self.degree as i64;
        let mut p = NumPoly::binomial(n as i64, n);
        for (k, &g) in self.growth_vector().entries().iter().enumerate() {
            if g > 0 {
                let term = NumPoly::binomial(k as i64 - s, k)
                    .scale(&num_rational::BigRational::from_integer(BigInt::from(g)));
                p = &p - &term;
            }
        }
        p
    }
}

/// A monomial ideal, given by its minimal generators, closed under increasing moves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StronglyStableIdeal {
    arity: usize,
    generators: Vec<Monomial>,
}

/// Removes duplicates and non-minimal generators; output is canonically sorted.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let sorted: BTreeSet<Monomial> = gens.into_iter().collect();
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    // Divisors have lower degree, so they appear first in canonical order.
    for g in sorted {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn ideal_contains(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Whether the ideal generated by `gens` is strongly stable. Mixed arities give `false`.
pub fn is_strongly_stable(gens: &[Monomial]) -> bool {
    let Some(first) = gens.first() else {
        return true;
    };
    if gens.iter().any(|g| g.arity() != first.arity()) {
        return false;
    }
    let minimal = minimalize(gens.iter().cloned());
    minimal
        .iter()
        .all(|g| g.upper_covers().all(|up| ideal_contains(&minimal, &up)))
}

impl StronglyStableIdeal {
    pub fn new(arity: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::EmptyRing);
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.arity() != arity) {
            return Err(Error::ArityMismatch { expected: arity, got: bad.arity() });
        }
        if !is_strongly_stable(&gens) {
            return Err(Error::NotStronglyStable);
        }
        Ok(StronglyStableIdeal { arity, generators: minimalize(gens) })
    }

    pub fn zero(arity: usize) -> Self {
        StronglyStableIdeal { arity, generators: Vec::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        ideal_contains(&self.generators, m)
    }

    /// Maximal generator degree (0 for the zero ideal).
    pub fn regularity(&self) -> u32 {
        self.generators.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// No generator involves `x0`.
    pub fn is_saturated(&self) -> bool {
        self.generators.iter().all(|g| g.exponent(0) == 0)
    }

    pub fn saturation(&self) -> StronglyStableIdeal {
        StronglyStableIdeal {
            arity: self.arity,
            generators: minimalize(self.generators.iter().map(Monomial::strip_first)),
        }
    }

    /// Monomial basis of the degree-`s` piece.
    pub fn degree_piece(&self, s: u32) -> BorelSet {
        let members = Monomial::all_of_degree(self.arity, s)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect();
        BorelSet::from_sorted(self.arity, s, members)
    }

    /// `dim (K[x]/I)_d`.
    pub fn hilbert_function(&self, d: u32) -> BigInt {
        let total = num_integer::binomial(BigInt::from(self.arity as u64 - 1 + d as u64), BigInt::from(self.arity - 1));
        total - BigInt::from(self.degree_piece(d).len())
    }

    /// Hilbert polynomial via the growth classes of the piece in degree `regularity`.
    pub fn hilbert_polynomial(&self) -> NumPoly {
        self.degree_piece(self.regularity()).hilbert_polynomial()
    }

    pub fn generators_of_degree(&self, s: u32) -> Vec<Monomial> {
        self.generators.iter().filter(|g| g.degree() == s).cloned().collect()
    }
}

/// `(I : x0^∞)`: strips `x0` from every generator and minimalizes. For a
/// strongly stable ideal this is the saturation. Fails when the result is
/// not strongly stable.
pub fn saturate(arity: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<StronglyStableIdeal> {
    let stripped: Vec<Monomial> = gens.into_iter().map(|g| g.strip_first()).collect();
    StronglyStableIdeal::new(arity, stripped)
}
