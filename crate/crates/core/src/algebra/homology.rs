//! Exact homological linear algebra: fraction-free rank over the fraction
//! field of the exponent group ring, and the free/torsion decomposition of
//! `ker d_out / im d_in` over Z₂[t,t⁻¹].

use alloc::vec::Vec;

use super::matrix::ScalarMatrix;
use super::novikov::NovikovScalar;
use super::snf::smith_normal_form;
use super::AlgebraError;

/// Rank of `m` over the fraction field, by fraction-free Gaussian
/// elimination. Rows are combined by cross-multiplication only, so no scalar
/// is ever inverted and rational exponents are fine.
pub fn rank_over_fraction_field(m: &ScalarMatrix) -> usize {
    let mut a = m.clone();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        for i in row + 1..a.rows() {
            if a.get(i, col).is_zero() {
                continue;
            }
            // row_i ← pivot·row_i + entry·row_pivot; the col entry cancels.
            let pivot = a.get(row, col).clone();
            let entry = a.get(i, col).clone();
            for j in col..a.cols() {
                let scaled = a.get(i, j).mul(&pivot);
                let sub = a.get(row, j).mul(&entry);
                a.set(i, j, scaled.add(&sub));
            }
            debug_assert!(a.get(i, col).is_zero());
        }
        rank += 1;
        row += 1;
    }
    rank
}

/// Free rank and torsion divisors of one homology module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyFragment {
    pub free_rank: usize,
    /// Nonunit diagonal divisors of the incoming differential, normalized to
    /// lowest exponent 0; each contributes a summand Λ/(f).
    pub torsion: Vec<NovikovScalar>,
}

impl HomologyFragment {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Homology `ker d_out / im d_in` of a composable pair of differentials over
/// Z₂[t,t⁻¹]. `d_in` maps into the module whose homology is computed and
/// `d_out` maps out of it, so `d_out · d_in = 0` is required.
pub fn homology_decompose(
    d_in: &ScalarMatrix,
    d_out: &ScalarMatrix,
) -> Result<HomologyFragment, AlgebraError> {
    assert_eq!(
        d_out.cols(),
        d_in.rows(),
        "differentials are not composable"
    );
    if !d_out.mul(d_in).is_zero() {
        return Err(AlgebraError::NotAComplex);
    }
    let rank_out = rank_over_fraction_field(d_out);
    let snf_in = smith_normal_form(d_in)?;
    let rank_in = snf_in.rank();
    debug_assert_eq!(rank_in, rank_over_fraction_field(d_in));
    let ambient = d_in.rows();
    let free_rank = ambient
        .checked_sub(rank_out + rank_in)
        .expect("rank-nullity violated for a complex");
    Ok(HomologyFragment {
        free_rank,
        torsion: snf_in.nonunit_divisors(),
    })
}
