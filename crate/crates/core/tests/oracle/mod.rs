//! Brute-force oracles. Nothing here calls the enumeration, Borel-order,
//! Hilbert-polynomial or segment code paths of the library; monomials are
//! plain exponent vectors.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use ssi_core::{NumPoly, StronglyStableIdeal};

pub type Exps = Vec<u32>;

/// All exponent vectors of total degree `degree` in `arity` variables.
pub fn monomials(arity: usize, degree: u32) -> Vec<Exps> {
    if arity == 1 {
        return vec![vec![degree]];
    }
    let mut out = Vec::new();
    for first in 0..=degree {
        for mut rest in monomials(arity - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn increasing_moves(m: &Exps) -> Vec<Exps> {
    (0..m.len() - 1)
        .filter(|&i| m[i] > 0)
        .map(|i| {
            let mut u = m.clone();
            u[i] -= 1;
            u[i + 1] += 1;
            u
        })
        .collect()
}

fn decreasing_moves(m: &Exps) -> Vec<Exps> {
    (1..m.len())
        .filter(|&j| m[j] > 0)
        .map(|j| {
            let mut u = m.clone();
            u[j] -= 1;
            u[j - 1] += 1;
            u
        })
        .collect()
}

/// `b ≥_B a` by breadth-first search over decreasing moves from `b`.
pub fn reachability_borel_leq(a: &Exps, b: &Exps) -> bool {
    let mut seen = BTreeSet::from([b.clone()]);
    let mut queue = VecDeque::from([b.clone()]);
    while let Some(m) = queue.pop_front() {
        if &m == a {
            return true;
        }
        for d in decreasing_moves(&m) {
            if seen.insert(d.clone()) {
                queue.push_back(d);
            }
        }
    }
    false
}

/// Set of all elements reachable upward (by increasing moves) from `m`, excluding `m`.
fn strictly_above(m: &Exps) -> BTreeSet<Exps> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([m.clone()]);
    while let Some(x) = queue.pop_front() {
        for u in increasing_moves(&x) {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen
}

/// Every up-set of `T_{n,s}` under the Borel order, keyed by size.
pub fn all_borel_sets_by_size(n: usize, s: u32) -> HashMap<usize, Vec<BTreeSet<Exps>>> {
    let elems = monomials(n + 1, s);
    let above: Vec<BTreeSet<Exps>> = elems.iter().map(strictly_above).collect();
    // Elements with fewer strict upper bounds first: a linear extension.
    let mut order: Vec<usize> = (0..elems.len()).collect();
    order.sort_by_key(|&i| above[i].len());
    let above_idx: Vec<Vec<usize>> = order
        .iter()
        .map(|&i| {
            order
                .iter()
                .enumerate()
                .filter(|(_, &j)| above[i].contains(&elems[j]))
                .map(|(pos, _)| pos)
                .collect()
        })
        .collect();
    let mut chosen = vec![false; order.len()];
    let mut out: HashMap<usize, Vec<BTreeSet<Exps>>> = HashMap::new();
    fn rec(
        at: usize,
        chosen: &mut Vec<bool>,
        above_idx: &[Vec<usize>],
        order: &[usize],
        elems: &[Exps],
        out: &mut HashMap<usize, Vec<BTreeSet<Exps>>>,
    ) {
        if at == order.len() {
            let set: BTreeSet<Exps> =
                (0..order.len()).filter(|&p| chosen[p]).map(|p| elems[order[p]].clone()).collect();
            out.entry(set.len()).or_default().push(set);
            return;
        }
        rec(at + 1, chosen, above_idx, order, elems, out);
        if above_idx[at].iter().all(|&p| chosen[p]) {
            chosen[at] = true;
            rec(at + 1, chosen, above_idx, order, elems, out);
            chosen[at] = false;
        }
    }
    rec(0, &mut chosen, &above_idx, &order, &elems, &mut out);
    out
}

pub fn all_borel_sets(n: usize, s: u32, size: usize) -> Vec<BTreeSet<Exps>> {
    all_borel_sets_by_size(n, s).remove(&size).unwrap_or_default()
}

/// Growth classes by smallest variable index.
pub fn growth_classes(set: &BTreeSet<Exps>, arity: usize) -> Vec<u64> {
    let mut g = vec![0u64; arity];
    for m in set {
        let i = m.iter().position(|&e| e > 0).unwrap_or(arity - 1);
        g[i] += 1;
    }
    g
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn gens_of(ideal: &StronglyStableIdeal) -> Vec<Exps> {
    ideal.generators().iter().map(|g| g.exponents().to_vec()).collect()
}

/// Degree-`d` monomials of the ideal generated by `gens`.
pub fn brute_piece(gens: &[Exps], arity: usize, d: u32) -> BTreeSet<Exps> {
    monomials(arity, d)
        .into_iter()
        .filter(|m| gens.iter().any(|g| divides(g, m)))
        .collect()
}

pub fn brute_hilbert_function(gens: &[Exps], arity: usize, d: u32) -> i64 {
    monomials(arity, d)
        .iter()
        .filter(|m| !gens.iter().any(|g| divides(g, m)))
        .count() as i64
}

fn poly_mul_linear(p: &[BigRational], root: &BigRational) -> Vec<BigRational> {
    // (t - root) * p
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        out[k + 1] += c;
        out[k] -= c * root;
    }
    out
}

fn poly_eval(p: &[BigRational], t: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
}

/// Lagrange interpolation of the Hilbert function sampled at
/// `m, …, m+n` (`m` = max generator degree), checked at two further points.
pub fn interpolate_hilbert_polynomial(ideal: &StronglyStableIdeal) -> NumPoly {
    let arity = ideal.arity();
    let gens = gens_of(ideal);
    let m = gens.iter().map(|g| g.iter().sum::<u32>()).max().unwrap_or(0);
    let xs: Vec<u32> = (m..=m + arity as u32 - 1).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|&d| BigRational::from_integer(BigInt::from(brute_hilbert_function(&gens, arity, d))))
        .collect();
    let mut coeffs = vec![BigRational::zero(); xs.len()];
    for (i, &xi) in xs.iter().enumerate() {
        let xi_r = BigRational::from_integer(BigInt::from(xi));
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                let xj_r = BigRational::from_integer(BigInt::from(xj));
                basis = poly_mul_linear(&basis, &xj_r);
                denom *= &xi_r - &xj_r;
            }
        }
        let factor = &ys[i] / denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &factor;
        }
    }
    for extra in [m + arity as u32, m + arity as u32 + 1] {
        let expected = BigRational::from_integer(BigInt::from(brute_hilbert_function(&gens, arity, extra)));
        let got = poly_eval(&coeffs, &BigRational::from_integer(BigInt::from(extra)));
        assert_eq!(got, expected, "interpolation disagrees at d = {extra}");
    }
    NumPoly::new(coeffs)
}

/// Non-decreasing integer vectors with entries in `1..=bound`.
pub fn monotone_weights(arity: usize, bound: u64) -> Vec<Vec<u64>> {
    fn rec(prefix: &mut Vec<u64>, arity: usize, bound: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == arity {
            out.push(prefix.clone());
            return;
        }
        let start = prefix.last().copied().unwrap_or(1);
        for w in start..=bound {
            prefix.push(w);
            rec(prefix, arity, bound, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), arity, bound, &mut out);
    out
}

fn dot(m: &[u32], w: &[u64]) -> u64 {
    m.iter().zip(w).map(|(&e, &x)| e as u64 * x).sum()
}

/// Full pairwise check of one block.
pub fn separates(inside: &[Exps], outside: &[Exps], w: &[u64]) -> bool {
    inside.iter().all(|a| outside.iter().all(|b| dot(a, w) > dot(b, w)))
}

/// Exhaustive search for a separating monotone weight vector with entries ≤ `bound`.
pub fn exhaustive_separator(blocks: &[(Vec<Exps>, Vec<Exps>)], arity: usize, bound: u64) -> Option<Vec<u64>> {
    monotone_weights(arity, bound)
        .into_iter()
        .find(|w| blocks.iter().all(|(i, o)| separates(i, o, w)))
}

/// Builds a Hilbert polynomial from a non-increasing sequence `a_1 ≥ … ≥ a_r`
/// by expanding `Σ C(t + a_i - (i-1), a_i)` with its own product formula.
pub fn hilbert_from_terms(terms: &[usize]) -> NumPoly {
    let mut total = vec![BigRational::zero(); terms.first().map_or(0, |a| a + 1)];
    for (i, &a) in terms.iter().enumerate() {
        let shift = a as i64 - i as i64;
        let mut basis = vec![BigRational::one()];
        let mut fact = BigInt::one();
        for j in 0..a {
            // multiply by (t + shift - j) = (t - (j - shift))
            basis = poly_mul_linear(&basis, &BigRational::from_integer(BigInt::from(j as i64 - shift)));
            fact *= BigInt::from(j + 1);
        }
        for (k, c) in basis.iter().enumerate() {
            total[k] += c / BigRational::from_integer(fact.clone());
        }
    }
    NumPoly::new(total)
}

/// Binomial `C(top, bottom)` by the multiplicative formula; 0 off the triangle.
pub fn binomial(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 || top < bottom || top < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..bottom {
        acc = acc * BigInt::from(top - j) / BigInt::from(j + 1);
    }
    acc
}

/// A non-increasing sequence `a_1 ≥ … ≥ a_r` with `1 ≤ r ≤ max_len`, `a_1 ≤ max_a`.
pub fn random_terms<R: rand::Rng>(rng: &mut R, max_len: usize, max_a: usize) -> Vec<usize> {
    let len = rng.gen_range(1..=max_len);
    let mut terms: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=max_a)).collect();
    terms.sort_unstable_by(|a, b| b.cmp(a));
    terms
}

/// Every non-increasing sequence of length `1..=max_len` with entries `≤ max_a`.
pub fn all_terms(max_len: usize, max_a: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, max_len: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == max_len {
            return;
        }
        for a in (0..=cap).rev() {
            prefix.push(a);
            rec(prefix, max_len, a, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), max_len, max_a, &mut out);
    out
}
