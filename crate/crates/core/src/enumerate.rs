//! Enumeration of saturated strongly stable ideals with a fixed Hilbert
//! polynomial.
//!
//! A saturated strongly stable ideal `I` with Hilbert polynomial `p` and
//! regularity at most `s` is determined by its degree-`s` piece, which is a
//! Borel set whose growth vector is `gv_s(p)`. Those Borel sets are built
//! recursively: the part not divisible by `x0` is a Borel set for `Δp` in
//! the variables `x1, …, xn`, and the part divisible by `x0` is `x0·A` for
//! a Borel set `A` of degree `s-1` of the prescribed size, drawn from the
//! pool of monomials compatible with the first part.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::borel::{saturate, BorelSet, StronglyStableIdeal};
use crate::error::{Error, Result};
use crate::hilbert::{gotzmann_number, growth_vector, is_hilbert_polynomial};
use crate::monomial::Monomial;
use crate::numpoly::NumPoly;

fn check_input(p: &NumPoly, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyRing);
    }
    let Some(d) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if d >= n {
        return Err(Error::TooFewVariables { degree: d, vars: n + 1 });
    }
    if !is_hilbert_polynomial(p) {
        // Reports the failing greedy step.
        crate::hilbert::gotzmann_decomposition(p)?;
    }
    Ok(())
}

/// All Borel sets in degree `s` of `K[x0, …, xn]` with growth vector `gv_s(p)`,
/// canonically sorted.
pub fn enumerate_borel_sets(n: usize, s: u32, p: &NumPoly) -> Result<Vec<BorelSet>> {
    check_input(p, n)?;
    if s == 0 {
        return Err(Error::NonPositiveDegree);
    }
    let mut sets: Vec<BorelSet> = borel_sets_rec(n + 1, s, p)?
        .into_iter()
        .map(|members| BorelSet::from_sorted(n + 1, s, members))
        .collect();
    sets.sort();
    Ok(sets)
}

/// Member lists (canonical order) of the matching Borel sets in `arity` variables.
fn borel_sets_rec(arity: usize, s: u32, p: &NumPoly) -> Result<Vec<Vec<Monomial>>> {
    if p.is_zero() {
        return Ok(vec![Monomial::all_of_degree(arity, s)]);
    }
    let n = arity - 1;
    let Some(gv) = growth_vector(p, s, n)? else {
        return Ok(Vec::new());
    };
    let first_class = gv.entries()[0] as usize;
    if arity == 1 {
        return Ok(match first_class {
            0 => vec![Vec::new()],
            _ => vec![vec![Monomial::var_power(1, 0, s)]],
        });
    }
    let tails = borel_sets_rec(arity - 1, s, &p.finite_difference(1))?;
    if tails.is_empty() {
        return Ok(Vec::new());
    }
    let poset = Poset::new(arity, s - 1);
    let mut out: Vec<Vec<Monomial>> = tails
        .par_iter()
        .flat_map_iter(|tail| {
            let upper: Vec<Monomial> = tail.iter().map(|m| m.prepend(0)).collect();
            extend_by_first_variable(&poset, &upper, first_class)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Every `B' ∪ x0·A` with `A` a Borel set of size `size` inside the pool
/// `{ u : x0 | u } ∪ { u : x1·u ∈ B' }`.
fn extend_by_first_variable(poset: &Poset, upper: &[Monomial], size: usize) -> Vec<Vec<Monomial>> {
    let allowed: Vec<bool> = poset
        .elements
        .iter()
        .map(|u| u.exponent(0) > 0 || upper.binary_search(&u.mul_var(1)).is_ok())
        .collect();
    let mut search = UpsetSearch::new(poset, &allowed, size);
    search.run();
    search
        .found
        .into_iter()
        .map(|chosen| {
            let mut members = upper.to_vec();
            members.extend(chosen.into_iter().map(|i| poset.elements[i].mul_var(0)));
            members.sort();
            members
        })
        .collect()
}

/// `T_{n,d}` in canonical order (a linear extension of the Borel order,
/// greater elements first) with cover relations as indices.
pub(crate) struct Poset {
    pub(crate) elements: Vec<Monomial>,
    lower: Vec<Vec<usize>>,
}

impl Poset {
    pub(crate) fn new(arity: usize, degree: u32) -> Self {
        let elements = Monomial::all_of_degree(arity, degree);
        let index: HashMap<&Monomial, usize> = elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let lower = elements
            .iter()
            .map(|m| m.lower_covers().map(|l| index[&l]).collect())
            .collect();
        Poset { elements, lower }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Undecided,
    In,
    Out,
}

/// DFS over include/exclude decisions in linear-extension order. Excluding
/// an element excludes its whole down-set, so every included element has
/// all of its upper covers included and each leaf is a distinct up-set.
struct UpsetSearch<'a> {
    poset: &'a Poset,
    target: usize,
    status: Vec<Status>,
    included: usize,
    undecided: usize,
    found: Vec<Vec<usize>>,
}

impl<'a> UpsetSearch<'a> {
    fn new(poset: &'a Poset, allowed: &[bool], target: usize) -> Self {
        let len = poset.elements.len();
        let mut search = UpsetSearch {
            poset,
            target,
            status: vec![Status::Undecided; len],
            included: 0,
            undecided: len,
            found: Vec::new(),
        };
        let mut trail = Vec::new();
        for (i, &ok) in allowed.iter().enumerate() {
            if !ok {
                search.exclude_downset(i, &mut trail);
            }
        }
        search
    }

    fn exclude_downset(&mut self, root: usize, trail: &mut Vec<usize>) {
        if self.status[root] != Status::Undecided {
            return;
        }
        let mut stack = vec![root];
        self.status[root] = Status::Out;
        self.undecided -= 1;
        trail.push(root);
        while let Some(v) = stack.pop() {
            for &l in &self.poset.lower[v] {
                if self.status[l] == Status::Undecided {
                    self.status[l] = Status::Out;
                    self.undecided -= 1;
                    trail.push(l);
                    stack.push(l);
                }
            }
        }
    }

    fn run(&mut self) {
        self.dfs(0);
    }

    fn dfs(&mut self, mut at: usize) {
        if self.included == self.target {
            let chosen = (0..self.status.len()).filter(|&i| self.status[i] == Status::In).collect();
            self.found.push(chosen);
            return;
        }
        if self.included + self.undecided < self.target {
            return;
        }
        while at < self.status.len() && self.status[at] != Status::Undecided {
            at += 1;
        }
        if at == self.status.len() {
            return;
        }

        self.status[at] = Status::In;
        self.included += 1;
        self.undecided -= 1;
        self.dfs(at + 1);
        self.included -= 1;
        self.undecided += 1;
        self.status[at] = Status::Undecided;

        let mut trail = Vec::new();
        self.exclude_downset(at, &mut trail);
        self.dfs(at + 1);
        for &i in &trail {
            self.status[i] = Status::Undecided;
        }
        self.undecided += trail.len();
    }
}

/// Degree in which the search runs: the Gotzmann number, lowered to
/// `max_regularity` when that is smaller.
pub fn search_degree(p: &NumPoly, max_regularity: Option<u32>) -> Result<u32> {
    if max_regularity == Some(0) {
        return Err(Error::NonPositiveRegularity);
    }
    let r = gotzmann_number(p)?;
    let r = u32::try_from(r).map_err(|_| Error::DecompositionTooLarge(p.clone()))?;
    Ok(max_regularity.map_or(r, |m| m.min(r)))
}

/// All saturated strongly stable ideals of `K[x0, …, xn]` with Hilbert
/// polynomial `p` and regularity at most `max_regularity` (default: the
/// Gotzmann number, which returns every such ideal).
pub fn strongly_stable_ideals(
    p: &NumPoly,
    n: usize,
    max_regularity: Option<u32>,
) -> Result<Vec<StronglyStableIdeal>> {
    check_input(p, n)?;
    let s = search_degree(p, max_regularity)?;
    let sets = enumerate_borel_sets(n, s, p)?;
    let mut ideals = sets
        .into_iter()
        .map(|b| saturate(n + 1, b.members().iter().cloned()))
        .collect::<Result<Vec<_>>>()?;
    ideals.sort();
    ideals.dedup();
    Ok(ideals)
}
