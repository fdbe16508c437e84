//! Exact coefficient arithmetic and homological linear algebra over the
//! GF(2) Novikov ring.

pub mod homology;
pub mod matrix;
pub mod novikov;
pub mod snf;

pub use homology::{homology_decompose, rank_over_fraction_field, HomologyFragment};
pub use matrix::ScalarMatrix;
pub use novikov::NovikovScalar;
pub use snf::{smith_normal_form, SNFResult};

use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Smith normal form and Laurent division need integer exponents; rescale
    /// rational exponents by a common denominator first.
    NonIntegerExponent,
    /// The supplied differentials do not compose to zero.
    NotAComplex,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NonIntegerExponent => {
                write!(f, "entries have non-integer exponents; rescale first")
            }
            AlgebraError::NotAComplex => write!(f, "differentials do not compose to zero"),
        }
    }
}
