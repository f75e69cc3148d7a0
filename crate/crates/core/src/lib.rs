//! Saturated strongly stable ideals with a prescribed Hilbert polynomial.
//!
//! The crate covers the numerical-polynomial calculus (Gotzmann and Macaulay
//! decompositions, growth vectors, lexicographic ideals), Borel sets and
//! strongly stable ideals, the recursive enumeration of all saturated
//! strongly stable ideals with a given Hilbert polynomial, and segment tests
//! with explicit weight-vector certificates.
//!
//! ```
//! use ssi_core::{strongly_stable_ideals, NumPoly, VariableNames};
//!
//! let p: NumPoly = "4*t".parse().unwrap();
//! let ideals = strongly_stable_ideals(&p, 3, Some(4)).unwrap();
//! let names = VariableNames::default_for(4);
//! let text: Vec<String> = ideals.iter().map(|i| names.ideal(i.generators())).collect();
//! assert_eq!(text, ["(x3^2, x3*x2, x3*x1^2, x2^4)", "(x3^2, x3*x2, x2^3)"]);
//! ```

pub mod borel;
pub mod enumerate;
pub mod error;
pub mod hilbert;
pub mod monomial;
pub mod numpoly;
mod parse;
pub mod segment;
pub mod text;

pub use borel::{is_strongly_stable, minimalize, saturate, BorelSet, StronglyStableIdeal};
pub use enumerate::{enumerate_borel_sets, search_degree, strongly_stable_ideals};
pub use error::{Error, GreedyFailure, Result};
pub use hilbert::{
    gotzmann_decomposition, gotzmann_number, growth_vector, is_hilbert_polynomial, lex_ideal,
    macaulay_decomposition, GotzmannDecomposition, GrowthVector, MacaulayDecomposition,
};
pub use monomial::{borel_leq, Monomial};
pub use numpoly::NumPoly;
pub use parse::parse_polynomial;
pub use segment::{
    find_separating_weight, is_gen_segment, is_hilb_segment, is_reg_segment, is_segment,
    segment_problem, SegmentKind, SegmentOutcome, SeparationBlock, SeparationProblem, WeightVector,
};
pub use text::VariableNames;
