//! Segment properties of saturated strongly stable ideals.
//!
//! A block `(inside, outside)` of same-degree monomials is separated by a
//! weight vector `w` when `w·α > w·β` for every `α` inside and `β` outside.
//! Weights are searched among positive, non-decreasing integer vectors, so
//! the induced order refines the Borel order and only Borel-minimal inside
//! elements need to be compared against Borel-maximal outside elements.

mod fm;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::borel::StronglyStableIdeal;
use crate::error::{Error, Result};
use crate::hilbert::gotzmann_number;
use crate::monomial::{borel_leq_unchecked, Monomial};

use fm::Constraint;

/// Positive, non-decreasing, primitive integer weights; index `i` weighs `x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        let valid = !weights.is_empty()
            && weights.iter().all(|&w| w >= 1)
            && weights.windows(2).all(|p| p[0] <= p[1])
            && weights.iter().fold(0u64, |g, &w| g.gcd(&w)) == 1;
        if !valid {
            return Err(Error::MalformedProblem(format!("invalid weight vector {weights:?}")));
        }
        Ok(WeightVector(weights))
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationBlock {
    pub inside: Vec<Monomial>,
    pub outside: Vec<Monomial>,
}

/// Blocks that must all be separated by one weight vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationProblem {
    arity: usize,
    blocks: Vec<SeparationBlock>,
}

impl SeparationProblem {
    pub fn new(arity: usize, blocks: Vec<SeparationBlock>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::EmptyRing);
        }
        for (i, block) in blocks.iter().enumerate() {
            let mut degree = None;
            for m in block.inside.iter().chain(&block.outside) {
                if m.arity() != arity {
                    return Err(Error::MalformedProblem(format!("block {i}: arity mismatch")));
                }
                if *degree.get_or_insert(m.degree()) != m.degree() {
                    return Err(Error::MalformedProblem(format!("block {i}: mixed degrees")));
                }
            }
            if block.inside.iter().any(|m| block.outside.contains(m)) {
                return Err(Error::MalformedProblem(format!("block {i}: inside and outside overlap")));
            }
        }
        Ok(SeparationProblem { arity, blocks })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn blocks(&self) -> &[SeparationBlock] {
        &self.blocks
    }

    /// Number of (inside, outside) pairs across all blocks.
    pub fn pair_count(&self) -> usize {
        self.blocks.iter().map(|b| b.inside.len() * b.outside.len()).sum()
    }

    /// Checks `w·α > w·β` on every pair, not only the reduced ones.
    pub fn separates(&self, w: &[u64]) -> bool {
        w.len() == self.arity
            && self.blocks.iter().all(|b| {
                let floor = b.inside.iter().map(|m| m.weight(w)).min();
                let ceil = b.outside.iter().map(|m| m.weight(w)).max();
                match (floor, ceil) {
                    (Some(lo), Some(hi)) => lo > hi,
                    _ => true,
                }
            })
    }
}

fn minimal_elements(set: &[Monomial]) -> Vec<&Monomial> {
    set.iter()
        .filter(|a| !set.iter().any(|b| b != *a && borel_leq_unchecked(b, a)))
        .collect()
}

fn maximal_elements(set: &[Monomial]) -> Vec<&Monomial> {
    set.iter()
        .filter(|a| !set.iter().any(|b| b != *a && borel_leq_unchecked(a, b)))
        .collect()
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Finds a separating weight vector, or `None` when the system
/// `(α-β)·w ≥ 1, w_{i+1} ≥ w_i, w_0 ≥ 1` is infeasible.
pub fn find_separating_weight(problem: &SeparationProblem) -> Result<Option<WeightVector>> {
    let dim = problem.arity;
    let mut constraints = Vec::new();
    let mut floor = vec![BigRational::zero(); dim];
    floor[0] = BigRational::one();
    constraints.push(Constraint::new(floor, BigRational::one()));
    for i in 0..dim - 1 {
        let mut c = vec![BigRational::zero(); dim];
        c[i] = rational(-1);
        c[i + 1] = rational(1);
        constraints.push(Constraint::new(c, BigRational::zero()));
    }
    for block in &problem.blocks {
        let outside = maximal_elements(&block.outside);
        for a in minimal_elements(&block.inside) {
            for b in &outside {
                let coeffs = a
                    .exponents()
                    .iter()
                    .zip(b.exponents())
                    .map(|(&x, &y)| rational(x as i64 - y as i64))
                    .collect();
                constraints.push(Constraint::new(coeffs, BigRational::one()));
            }
        }
    }
    let Some(point) = fm::solve(dim, constraints) else {
        return Ok(None);
    };
    let weights = to_primitive_integers(&point)?;
    if !problem.separates(&weights) {
        return Err(Error::Internal(format!("solver returned a non-separating weight {weights:?}")));
    }
    Ok(Some(WeightVector::new(weights)?))
}

fn to_primitive_integers(point: &[BigRational]) -> Result<Vec<u64>> {
    let lcm = point.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = point.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = scaled.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    scaled
        .iter()
        .map(|x| (x / &gcd).to_u64().ok_or(Error::WeightOverflow))
        .collect()
}

/// Result of a segment test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentOutcome {
    pub weights: Option<WeightVector>,
    /// Pairs covered by the full verification of the certificate.
    pub checked_pairs: usize,
}

impl SegmentOutcome {
    pub fn is_segment(&self) -> bool {
        self.weights.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    Hilb,
    Reg,
    Gen,
}

fn require_saturated(ideal: &StronglyStableIdeal) -> Result<()> {
    if !ideal.is_saturated() {
        return Err(Error::MalformedProblem("ideal is not saturated".into()));
    }
    Ok(())
}

fn piece_block(ideal: &StronglyStableIdeal, s: u32) -> SeparationBlock {
    let piece = ideal.degree_piece(s);
    SeparationBlock { outside: piece.complement(), inside: piece.members().to_vec() }
}

/// Builds the separation problem behind each segment notion.
pub fn segment_problem(ideal: &StronglyStableIdeal, kind: SegmentKind) -> Result<SeparationProblem> {
    require_saturated(ideal)?;
    let blocks = match kind {
        SegmentKind::Hilb => {
            let r = gotzmann_number(&ideal.hilbert_polynomial())?;
            let r = u32::try_from(r).map_err(|_| Error::DecompositionTooLarge(ideal.hilbert_polynomial()))?;
            vec![piece_block(ideal, r)]
        }
        SegmentKind::Reg => vec![piece_block(ideal, ideal.regularity())],
        SegmentKind::Gen => {
            let mut degrees: Vec<u32> = ideal.generators().iter().map(Monomial::degree).collect();
            degrees.dedup();
            degrees
                .into_iter()
                .map(|s| SeparationBlock {
                    inside: ideal.generators_of_degree(s),
                    outside: ideal.degree_piece(s).complement(),
                })
                .collect()
        }
    };
    SeparationProblem::new(ideal.arity(), blocks)
}

pub fn is_segment(ideal: &StronglyStableIdeal, kind: SegmentKind) -> Result<SegmentOutcome> {
    let problem = segment_problem(ideal, kind)?;
    let weights = find_separating_weight(&problem)?;
    Ok(SegmentOutcome { weights, checked_pairs: problem.pair_count() })
}

/// The degree-`r` piece is a segment, `r` the Gotzmann number.
pub fn is_hilb_segment(ideal: &StronglyStableIdeal) -> Result<SegmentOutcome> {
    is_segment(ideal, SegmentKind::Hilb)
}

/// The piece in degree equal to the regularity is a segment.
pub fn is_reg_segment(ideal: &StronglyStableIdeal) -> Result<SegmentOutcome> {
    is_segment(ideal, SegmentKind::Reg)
}

/// In every generator degree, the generators beat the complement.
pub fn is_gen_segment(ideal: &StronglyStableIdeal) -> Result<SegmentOutcome> {
    is_segment(ideal, SegmentKind::Gen)
}
