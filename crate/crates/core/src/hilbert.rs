//! Hilbert polynomials: validity, Gotzmann and Macaulay decompositions,
//! growth vectors and the saturated lexicographic ideal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::borel::StronglyStableIdeal;
use crate::error::{Error, GreedyFailure, Result};
use crate::monomial::Monomial;
use crate::numpoly::NumPoly;

/// `p(t) = Σ_i C(t + a_i - (i-1), a_i)` with `a_1 ≥ … ≥ a_r ≥ 0`.
///
/// Stored run-length encoded as `(a, multiplicity)` pairs, `a` decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GotzmannDecomposition {
    runs: Vec<(usize, u64)>,
}

impl GotzmannDecomposition {
    /// The sequence `a_1, …, a_r`.
    pub fn terms(&self) -> Vec<usize> {
        self.runs
            .iter()
            .flat_map(|&(a, count)| std::iter::repeat_n(a, count as usize))
            .collect()
    }

    pub fn runs(&self) -> &[(usize, u64)] {
        &self.runs
    }

    /// `r`, the number of summands.
    pub fn gotzmann_number(&self) -> u64 {
        self.runs.iter().map(|&(_, c)| c).sum()
    }

    /// The summands `C(t + a_i - (i-1), a_i)` in order.
    pub fn summands(&self) -> Vec<NumPoly> {
        self.terms()
            .into_iter()
            .enumerate()
            .map(|(i, a)| NumPoly::binomial(a as i64 - i as i64, a))
            .collect()
    }
}

/// `p(t) = Σ_{k=0}^{d} [C(t+k, k+1) - C(t+k-m_k, k+1)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayDecomposition {
    m: Vec<u64>,
}

impl MacaulayDecomposition {
    pub fn coefficients(&self) -> &[u64] {
        &self.m
    }

    /// `b_k = m_k - m_{k+1}` for `k < d`, `b_d = m_d`.
    pub fn lex_exponents(&self) -> Vec<u64> {
        (0..self.m.len())
            .map(|k| self.m[k] - self.m.get(k + 1).copied().unwrap_or(0))
            .collect()
    }

    /// The summand for each `k`.
    pub fn summands(&self) -> Vec<NumPoly> {
        self.m
            .iter()
            .enumerate()
            .map(|(k, &mk)| {
                let k = k as i64;
                &NumPoly::binomial(k, k as usize + 1)
                    - &NumPoly::binomial(k - mk as i64, k as usize + 1)
            })
            .collect()
    }

    pub fn reconstruct(&self) -> NumPoly {
        self.summands().iter().fold(NumPoly::zero(), |acc, s| &acc + s)
    }
}

/// Sizes `(g_0, …, g_n)` of the growth classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrowthVector {
    entries: Vec<u64>,
}

impl GrowthVector {
    pub fn new(entries: Vec<u64>) -> Self {
        GrowthVector { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Integer binomial coefficient, 0 when `bottom > top` or `top < 0`.
pub(crate) fn binomial_int(top: i64, bottom: u64) -> BigInt {
    if top < 0 || (bottom as i64) > top {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(top), BigInt::from(bottom))
}

struct GreedyError {
    step: BigInt,
    remainder: NumPoly,
    reason: GreedyFailure,
}

/// Runs the greedy decomposition one degree level at a time. At level `k`
/// the greedy takes exactly `lc·k!` steps, and the sum of those consecutive
/// binomials telescopes to `C(x+1, k+1) - C(x+1-c, k+1)`, so each level is
/// subtracted in one shot and the loop runs at most `deg p + 1` times.
fn greedy_levels(p: &NumPoly) -> std::result::Result<Vec<(usize, BigInt)>, GreedyError> {
    let mut runs = Vec::new();
    let Some(d) = p.degree() else {
        return Ok(runs);
    };
    let mut remainder = p.clone();
    let mut next_index = BigInt::one();
    for k in (0..=d).rev() {
        match remainder.degree() {
            None => break,
            Some(e) if e < k => continue,
            Some(_) => {}
        }
        let scaled = remainder.leading_coefficient() * BigRational::from_integer(factorial(k));
        if !scaled.is_positive() {
            return Err(GreedyError {
                step: next_index,
                remainder,
                reason: GreedyFailure::NegativeLeadingCoefficient,
            });
        }
        let whole = scaled.floor().to_integer();
        if whole.is_positive() {
            // x + 1 = t + k - next_index + 2
            let top = BigRational::from_integer(BigInt::from(k as i64 + 2) - &next_index);
            let bottom = &top - BigRational::from_integer(whole.clone());
            let block = &NumPoly::binomial_shifted(&top, k + 1) - &NumPoly::binomial_shifted(&bottom, k + 1);
            remainder = &remainder - &block;
            next_index += &whole;
            runs.push((k, whole));
        }
        if !scaled.is_integer() {
            return Err(GreedyError {
                step: next_index,
                remainder,
                reason: GreedyFailure::NonIntegerLeadingCoefficient,
            });
        }
    }
    debug_assert!(remainder.is_zero());
    Ok(runs)
}

pub fn gotzmann_decomposition(p: &NumPoly) -> Result<GotzmannDecomposition> {
    let runs = greedy_levels(p).map_err(|e| Error::NotHilbertPolynomial {
        poly: p.clone(),
        step: e.step.to_u64().unwrap_or(u64::MAX),
        remainder: e.remainder,
        reason: e.reason,
    })?;
    let mut total: u64 = 0;
    let mut out = Vec::with_capacity(runs.len());
    for (a, count) in runs {
        let count = count.to_u64().ok_or_else(|| Error::DecompositionTooLarge(p.clone()))?;
        total = total.checked_add(count).ok_or_else(|| Error::DecompositionTooLarge(p.clone()))?;
        out.push((a, count));
    }
    Ok(GotzmannDecomposition { runs: out })
}

/// Total for every rational polynomial; the zero polynomial counts as valid.
pub fn is_hilbert_polynomial(p: &NumPoly) -> bool {
    greedy_levels(p).is_ok()
}

pub fn gotzmann_number(p: &NumPoly) -> Result<u64> {
    Ok(gotzmann_decomposition(p)?.gotzmann_number())
}

pub fn macaulay_decomposition(p: &NumPoly) -> Result<MacaulayDecomposition> {
    let Some(d) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let g = gotzmann_decomposition(p)?;
    let m = (0..=d)
        .map(|k| g.runs.iter().filter(|&&(a, _)| a >= k).map(|&(_, c)| c).sum())
        .collect();
    Ok(MacaulayDecomposition { m })
}

/// Growth vector of `p` in degree `s` for `K[x0, …, xn]`, or `None` when no
/// Borel set can realise it.
pub fn growth_vector(p: &NumPoly, s: u32, n: usize) -> Result<Option<GrowthVector>> {
    if s == 0 {
        return Err(Error::NonPositiveDegree);
    }
    let s_i = s as i64;
    let mut diffs = Vec::with_capacity(n + 2);
    let mut q = p.clone();
    for _ in 0..=n + 1 {
        match q.evaluate_integer(s_i) {
            Some(v) => diffs.push(v),
            None => return Ok(None),
        }
        q = q.finite_difference(1);
    }
    let mut entries = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let value = if i == n {
            BigInt::one() - &diffs[n]
        } else {
            let k = (n - i) as i64;
            binomial_int(k + s_i - 1, k as u64) - &diffs[i] + &diffs[i + 1]
        };
        let class_size = binomial_int((n - i) as i64 + s_i - 1, (n - i) as u64);
        if value.is_negative() || value > class_size {
            return Ok(None);
        }
        match value.to_u64() {
            Some(v) => entries.push(v),
            None => return Ok(None),
        }
    }
    let total: BigInt = entries.iter().map(|&g| BigInt::from(g)).sum();
    if total != binomial_int(n as i64 + s_i, n as u64) - &diffs[0] {
        return Ok(None);
    }
    Ok(Some(GrowthVector { entries }))
}

/// Saturated lexicographic ideal with Hilbert polynomial `p` in `K[x0, …, xn]`.
pub fn lex_ideal(p: &NumPoly, n: usize) -> Result<StronglyStableIdeal> {
    let Some(d) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if n < d + 1 {
        return Err(Error::TooFewVariables { degree: d, vars: n + 1 });
    }
    let b = macaulay_decomposition(p)?.lex_exponents();
    let to_u32 = |v: u64| u32::try_from(v).map_err(|_| Error::DecompositionTooLarge(p.clone()));
    let arity = n + 1;
    let mut gens = Vec::new();
    for i in (d + 2..=n).rev() {
        gens.push(Monomial::var_power(arity, i, 1));
    }
    // prefix = x_{d+1}^{b_d} ⋯ x_{j+1}^{b_j}
    let mut prefix = vec![0u32; arity];
    for j in (2..=d + 1).rev() {
        let mut exps = prefix.clone();
        exps[j] = to_u32(b[j - 1])? + 1;
        gens.push(Monomial::from_vec(exps));
        prefix[j] = to_u32(b[j - 1])?;
    }
    prefix[1] = to_u32(b[0])?;
    gens.push(Monomial::from_vec(prefix));
    StronglyStableIdeal::new(arity, gens)
}
