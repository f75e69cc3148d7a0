//! Univariate numerical polynomials in `t` with exact rational coefficients.
//!
//! Hilbert polynomials, their finite differences and the binomial basis
//! `C(t+e, c)` all live here. Coefficients are stored densely, lowest degree
//! first, with trailing zeros trimmed so that structural equality is
//! polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NumPoly {
    coeffs: Vec<BigRational>,
}

impl NumPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        NumPoly { coeffs }
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        NumPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_integers(&[c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_integers(&[0, 1])
    }

    /// `t + shift`.
    pub fn linear(shift: BigRational) -> Self {
        Self::new(vec![shift, BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn evaluate(&self, t0: i64) -> BigRational {
        self.evaluate_at(&BigRational::from_integer(t0.into()))
    }

    pub fn evaluate_at(&self, t0: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t0 + c)
    }

    /// Value at an integer point as an integer, if it is one.
    pub fn evaluate_integer(&self, t0: i64) -> Option<BigInt> {
        let v = self.evaluate(t0);
        v.is_integer().then(|| v.to_integer())
    }

    /// `t ↦ C(t + shift, bottom) = (t+shift)(t+shift-1)…(t+shift-bottom+1) / bottom!`.
    pub fn binomial(shift: i64, bottom: usize) -> Self {
        Self::binomial_shifted(&BigRational::from_integer(shift.into()), bottom)
    }

    pub(crate) fn binomial_shifted(shift: &BigRational, bottom: usize) -> Self {
        let mut acc = NumPoly::from_int(1);
        let mut factorial = BigInt::one();
        for j in 0..bottom {
            let offset = shift - BigRational::from_integer(BigInt::from(j));
            acc = &acc * &NumPoly::linear(offset);
            factorial *= BigInt::from(j + 1);
        }
        acc.scale(&BigRational::new(BigInt::one(), factorial))
    }

    /// `p(t + k)`.
    pub fn shift(&self, k: i64) -> Self {
        let step = NumPoly::linear(BigRational::from_integer(k.into()));
        self.coeffs.iter().rev().fold(NumPoly::zero(), |acc, c| {
            &(&acc * &step) + &NumPoly::constant(c.clone())
        })
    }

    /// `Δ^order p`, where `Δp(t) = p(t) - p(t-1)`.
    pub fn finite_difference(&self, order: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..order {
            if p.is_zero() {
                break;
            }
            let back = p.shift(-1);
            p = &p - &back;
        }
        p
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl Add for &NumPoly {
    type Output = NumPoly;

    fn add(self, rhs: &NumPoly) -> NumPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..len)
            .map(|k| self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero))
            .collect();
        NumPoly::new(coeffs)
    }
}

impl Sub for &NumPoly {
    type Output = NumPoly;

    fn sub(self, rhs: &NumPoly) -> NumPoly {
        self + &(-rhs)
    }
}

impl Neg for &NumPoly {
    type Output = NumPoly;

    fn neg(self) -> NumPoly {
        NumPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &NumPoly {
    type Output = NumPoly;

    fn mul(self, rhs: &NumPoly) -> NumPoly {
        if self.is_zero() || rhs.is_zero() {
            return NumPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        NumPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for NumPoly {
            type Output = NumPoly;
            fn $m(self, rhs: NumPoly) -> NumPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for NumPoly {
    type Output = NumPoly;
    fn neg(self) -> NumPoly {
        -&self
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

/// Canonical text: highest degree first, `*` between coefficient and `t`,
/// non-integer coefficients parenthesised. Re-parses to the same value.
impl fmt::Display for NumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let abs = c.abs();
            let body = match k {
                0 => fmt_rational(&abs),
                _ => {
                    let var = if k == 1 { "t".to_string() } else { format!("t^{k}") };
                    if abs.is_one() {
                        var
                    } else {
                        format!("{}*{}", fmt_rational(&abs), var)
                    }
                }
            };
            f.write_str(&body)?;
        }
        Ok(())
    }
}

impl FromStr for NumPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        crate::parse::parse_polynomial(s)
    }
}
