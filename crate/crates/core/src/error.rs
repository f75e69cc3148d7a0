use thiserror::Error;

use crate::numpoly::NumPoly;

/// Why the greedy Gotzmann decomposition rejected a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyFailure {
    /// The remainder has a negative leading coefficient.
    NegativeLeadingCoefficient,
    /// The leading coefficient of the remainder is positive but smaller than `1/d!`.
    NonIntegerLeadingCoefficient,
}

impl std::fmt::Display for GreedyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GreedyFailure::NegativeLeadingCoefficient => f.write_str("negative leading coefficient"),
            GreedyFailure::NonIntegerLeadingCoefficient => {
                f.write_str("leading coefficient is not a positive multiple of 1/d!")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{poly} is not a Hilbert polynomial: greedy step {step} fails on remainder {remainder} ({reason})")]
    NotHilbertPolynomial {
        poly: NumPoly,
        step: u64,
        remainder: NumPoly,
        reason: GreedyFailure,
    },
    #[error("Gotzmann number of {0} is too large to expand")]
    DecompositionTooLarge(NumPoly),
    #[error("the zero polynomial is not accepted here")]
    ZeroPolynomial,
    #[error("polynomial of degree {degree} needs at least {} variables, got {vars}", degree + 2)]
    TooFewVariables { degree: usize, vars: usize },
    #[error("variable index {index} out of range for {arity} variables")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("degree mismatch: expected degree {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },
    #[error("ring must have at least one variable")]
    EmptyRing,
    #[error("the generators do not span a strongly stable ideal")]
    NotStronglyStable,
    #[error("degree must be positive")]
    NonPositiveDegree,
    #[error("max regularity must be positive")]
    NonPositiveRegularity,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("malformed separation problem: {0}")]
    MalformedProblem(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("weight vector overflow")]
    WeightOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;
