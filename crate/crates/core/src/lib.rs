//! Exact calculator for Lagrangian quantum homology and Lagrangian Floer
//! homology of monotone Lagrangian submanifolds, and for the transfer of both
//! to the monotone one-point blow-up of the ambient symplectic manifold.
//!
//! Everything is computed over GF(2) with exact rational bookkeeping: areas
//! are stored as ω/π, monotonicity constants as λ·π, so every monotonicity
//! identity is an exact rational equation and no float ever appears.
//!
//! The crate is split along the pipeline:
//!
//! * [`algebra`] — Novikov scalars (finite GF(2) formal sums with rational
//!   exponents), matrices over them, Smith normal form over Z₂[t,t⁻¹] and
//!   homology of complexes of free modules.
//! * [`model`] — manifold/Lagrangian data: disk and strip classes, critical
//!   points, trajectory counts, with exact validation.
//! * [`blowup`] — monotone blow-up weight, proper transforms of classes,
//!   minimal Maslov number of the proper transform, admissibility verdicts.
//! * [`pearl`] — pearl complexes, quantum homology, the blow-up differential
//!   transform and the wide/narrow classification.
//! * [`floer`] — two-Lagrangian Floer complexes and their blow-up transfer.
//!
//! No almost complex structure, metric or Morse function is ever represented:
//! all moduli counts are input data, and the crate only does the exact
//! bookkeeping that turns them into homology.
//!
//! ```
//! use pearl_core::algebra::NovikovScalar;
//! use pearl_core::rat;
//!
//! // GF(2) cancellation: t + t = 0, and (1 + t)^2 = 1 + t^2.
//! let t = NovikovScalar::monomial(rat(1));
//! assert!(t.add(&t).is_zero());
//! let p = NovikovScalar::one().add(&t);
//! assert_eq!(p.mul(&p).support(), &[rat(0), rat(2)]);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod blowup;
pub mod floer;
pub mod model;
pub mod pearl;

/// Exact rational number used for areas (ω/π), monotonicity constants (λ·π)
/// and Novikov exponents throughout the crate.
pub type Rat = num_rational::Ratio<i64>;

/// Shorthand for an integer `Rat`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Shorthand for the exact fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}
