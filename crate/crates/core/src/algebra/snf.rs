//! Smith normal form over the principal ideal domain Z₂[t,t⁻¹].
//!
//! Entries must be Laurent polynomials (integer exponents). The reduction is
//! Euclidean on the exponent span after unit normalization: the pivot is the
//! nonzero entry of minimal span in the trailing block, ties broken in
//! row-major order, which keeps the output deterministic.

use alloc::vec::Vec;

use crate::Rat;

use super::matrix::ScalarMatrix;
use super::novikov::NovikovScalar;
use super::AlgebraError;

/// Invertible change of basis `U · M · V = D` with `D` diagonal and the
/// diagonal entries forming a divisibility chain. `U` and `V` are products of
/// elementary operations, so their determinants are units (monomials).
#[derive(Clone, Debug)]
pub struct SNFResult {
    pub d: ScalarMatrix,
    pub u: ScalarMatrix,
    pub v: ScalarMatrix,
}

impl SNFResult {
    /// Nonzero diagonal divisors, unit-normalized (lowest exponent 0),
    /// ordered along the divisibility chain.
    pub fn divisors(&self) -> Vec<NovikovScalar> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|k| self.d.get(k, k))
            .filter(|e| !e.is_zero())
            .cloned()
            .collect()
    }

    /// Divisors that are not units: the torsion certificates.
    pub fn nonunit_divisors(&self) -> Vec<NovikovScalar> {
        self.divisors()
            .into_iter()
            .filter(|e| !e.is_monomial())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }
}

fn span_key(s: &NovikovScalar) -> Rat {
    s.span().expect("span of a nonzero scalar")
}

/// Minimal-span nonzero entry of the trailing block `m[k.., k..]`,
/// row-major on ties.
fn pick_pivot(m: &ScalarMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Rat, usize, usize)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let e = m.get(i, j);
            if e.is_zero() {
                continue;
            }
            let s = span_key(e);
            match &best {
                Some((bs, _, _)) if *bs <= s => {}
                _ => best = Some((s, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form of a Laurent-polynomial matrix.
///
/// Callers with rational exponents must rescale to a common denominator
/// first; a non-integer exponent anywhere yields `NonIntegerExponent`.
pub fn smith_normal_form(m: &ScalarMatrix) -> Result<SNFResult, AlgebraError> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).has_integer_exponents() {
                return Err(AlgebraError::NonIntegerExponent);
            }
        }
    }

    let mut b = m.clone();
    let mut u = ScalarMatrix::identity(m.rows());
    let mut v = ScalarMatrix::identity(m.cols());

    let n = m.rows().min(m.cols());
    for k in 0..n {
        while let Some((pi, pj)) = pick_pivot(&b, k) {
            b.swap_rows(k, pi);
            u.swap_rows(k, pi);
            b.swap_cols(k, pj);
            v.swap_cols(k, pj);

            // Reduce the pivot column and row; remainders shrink the span,
            // so re-pivoting terminates.
            let mut dirty = false;
            for i in k + 1..b.rows() {
                if b.get(i, k).is_zero() {
                    continue;
                }
                let (q, _) = b.get(i, k).div_rem(b.get(k, k))?;
                b.add_scaled_row(i, k, &q);
                u.add_scaled_row(i, k, &q);
                if !b.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..b.cols() {
                if b.get(k, j).is_zero() {
                    continue;
                }
                let (q, _) = b.get(k, j).div_rem(b.get(k, k))?;
                b.add_scaled_col(j, k, &q);
                v.add_scaled_col(j, k, &q);
                if !b.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }

            // Pivot row and column are clear; force the divisibility chain.
            let mut offender = None;
            'scan: for i in k + 1..b.rows() {
                for j in k + 1..b.cols() {
                    if b.get(i, j).is_zero() {
                        continue;
                    }
                    if !b.get(k, k).divides(b.get(i, j))? {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    // Pull the offending row next to the pivot and go again.
                    b.add_scaled_row(k, i, &NovikovScalar::one());
                    u.add_scaled_row(k, i, &NovikovScalar::one());
                }
                None => break,
            }
        }

        // Normalize the pivot so its lowest exponent is 0.
        if !b.get(k, k).is_zero() {
            let (shift, _) = b.get(k, k).normalized();
            if shift != Rat::from_integer(0) {
                b.shift_row(k, -shift);
                u.shift_row(k, -shift);
            }
        }
    }

    Ok(SNFResult { d: b, u, v })
}
