//! GF(2) Novikov scalars: finite formal sums of monomials `t^e` with exact
//! rational exponents.
//!
//! A scalar is stored as its support — the sorted set of exponents carrying a
//! nonzero (hence = 1) coefficient. Addition is symmetric difference of
//! supports, multiplication is convolution over the exponent group with mod-2
//! cancellation. When every exponent is an integer the scalar is an ordinary
//! Laurent polynomial in `t` over Z₂.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::Rat;

use super::AlgebraError;

/// Finite formal sum `Σ t^{e_i}` over GF(2), exponents in ℚ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NovikovScalar {
    /// Sorted ascending, duplicate-free support.
    terms: Vec<Rat>,
}

impl NovikovScalar {
    pub fn zero() -> Self {
        NovikovScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Rat::from_integer(0))
    }

    /// The single monomial `t^e`.
    pub fn monomial(exponent: Rat) -> Self {
        NovikovScalar {
            terms: alloc::vec![exponent],
        }
    }

    /// Builds a scalar from an arbitrary exponent list; repeated exponents
    /// cancel in pairs.
    pub fn from_exponents<I: IntoIterator<Item = Rat>>(exponents: I) -> Self {
        let mut parity: BTreeMap<Rat, bool> = BTreeMap::new();
        for e in exponents {
            let slot = parity.entry(e).or_insert(false);
            *slot = !*slot;
        }
        NovikovScalar {
            terms: parity
                .into_iter()
                .filter_map(|(e, odd)| odd.then_some(e))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == Rat::from_integer(0)
    }

    /// A unit of the Laurent ring is a single monomial.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn support(&self) -> &[Rat] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exponent(&self) -> Option<Rat> {
        self.terms.first().copied()
    }

    pub fn max_exponent(&self) -> Option<Rat> {
        self.terms.last().copied()
    }

    /// Exponent spread `max − min`; the Euclidean size used by the Smith
    /// normal form pivoting rule. Zero scalars have no span.
    pub fn span(&self) -> Option<Rat> {
        Some(self.max_exponent()? - self.min_exponent()?)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        // Merge of two sorted supports; equal exponents cancel mod 2.
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            match self.terms[i].cmp(&rhs.terms[j]) {
                core::cmp::Ordering::Less => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(rhs.terms[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        NovikovScalar { terms: out }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut parity: BTreeMap<Rat, bool> = BTreeMap::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let slot = parity.entry(*a + *b).or_insert(false);
                *slot = !*slot;
            }
        }
        NovikovScalar {
            terms: parity
                .into_iter()
                .filter_map(|(e, odd)| odd.then_some(e))
                .collect(),
        }
    }

    /// Multiplication by the unit `t^e`.
    pub fn shift(&self, e: Rat) -> Self {
        NovikovScalar {
            terms: self.terms.iter().map(|x| *x + e).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.iter().all(|e| e.is_integer())
    }

    /// Unit normalization: writes `self = t^m · p` with `p` of lowest
    /// exponent 0 and returns `(m, p)`. The zero scalar normalizes to itself
    /// with shift 0.
    pub fn normalized(&self) -> (Rat, Self) {
        match self.min_exponent() {
            None => (Rat::from_integer(0), Self::zero()),
            Some(m) => (m, self.shift(-m)),
        }
    }

    /// Laurent division: `self = q · rhs + r` with the remainder strictly
    /// smaller than `rhs` in degree after unit normalization. Requires
    /// integer exponents on both sides; `rhs` must be nonzero.
    pub fn div_rem(&self, rhs: &Self) -> Result<(Self, Self), AlgebraError> {
        assert!(!rhs.is_zero(), "division by the zero scalar");
        if !self.has_integer_exponents() || !rhs.has_integer_exponents() {
            return Err(AlgebraError::NonIntegerExponent);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let (ma, a) = self.normalized();
        let (mb, b) = rhs.normalized();
        let deg_b = b.max_exponent().expect("nonzero divisor");
        let mut r = a;
        let mut q = Self::zero();
        while let Some(deg_r) = r.max_exponent() {
            if deg_r < deg_b {
                break;
            }
            let shift = deg_r - deg_b;
            q = q.add(&Self::monomial(shift));
            r = r.add(&b.shift(shift));
        }
        // Undo the unit normalization of the dividend.
        Ok((q.shift(ma - mb), r.shift(ma)))
    }

    /// Exact divisibility in the Laurent ring (units factored out).
    pub fn divides(&self, dividend: &Self) -> Result<bool, AlgebraError> {
        Ok(dividend.div_rem(self)?.1.is_zero())
    }
}

impl fmt::Display for NovikovScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, e) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_integer() {
                match e.to_integer() {
                    0 => write!(f, "1")?,
                    1 => write!(f, "t")?,
                    k => write!(f, "t^{}", k)?,
                }
            } else {
                write!(f, "t^({})", e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NovikovScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};
    use proptest::prelude::*;

    fn t(e: i64) -> NovikovScalar {
        NovikovScalar::monomial(rat(e))
    }

    #[test]
    fn addition_cancels_in_characteristic_two() {
        assert!(t(1).add(&t(1)).is_zero());
    }

    #[test]
    fn addition_is_symmetric_difference() {
        let sum = t(0).add(&t(1)).add(&t(1));
        assert_eq!(sum, t(0));
    }

    #[test]
    fn disjoint_rational_supports_stack() {
        let a = NovikovScalar::monomial(ratio(1, 3));
        let b = NovikovScalar::monomial(ratio(2, 3));
        let sum = a.add(&b);
        assert_eq!(sum.support(), &[ratio(1, 3), ratio(2, 3)]);
    }

    #[test]
    fn monomial_inverses_multiply_to_one() {
        assert!(t(1).mul(&t(-1)).is_one());
    }

    #[test]
    fn squaring_is_frobenius() {
        let p = t(0).add(&t(1));
        assert_eq!(p.mul(&p), t(0).add(&t(2)));
    }

    #[test]
    fn zero_absorbs() {
        assert!(NovikovScalar::zero().mul(&t(5)).is_zero());
    }

    #[test]
    fn division_with_units() {
        // t + t^2 = t · (1 + t): dividing by 1 + t leaves remainder 0.
        let a = t(1).add(&t(2));
        let b = t(0).add(&t(1));
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, t(1));
    }

    #[test]
    fn division_leaves_small_remainder() {
        // 1 + t + t^3 divided by 1 + t.
        let a = t(0).add(&t(1)).add(&t(3));
        let b = t(0).add(&t(1));
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.span().unwrap() < b.span().unwrap() || r.is_zero());
    }

    #[test]
    fn rational_exponents_refuse_division() {
        let a = NovikovScalar::monomial(ratio(1, 2));
        assert_eq!(
            a.div_rem(&NovikovScalar::one()).unwrap_err(),
            AlgebraError::NonIntegerExponent
        );
    }

    fn arb_scalar() -> impl Strategy<Value = NovikovScalar> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), 0..6)
            .prop_map(|v| NovikovScalar::from_exponents(v.into_iter().map(|(n, d)| Rat::new(n, d))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert!(a.add(&a).is_zero());
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&NovikovScalar::one()), a.clone());
        }

        #[test]
        fn division_invariant(a in arb_scalar(), b in arb_scalar()) {
            let a = NovikovScalar::from_exponents(
                a.support().iter().map(|e| Rat::from_integer(e.to_integer_lossy())));
            let b = NovikovScalar::from_exponents(
                b.support().iter().map(|e| Rat::from_integer(e.to_integer_lossy())));
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            if !r.is_zero() {
                let (_, rn) = r.normalized();
                let (_, bn) = b.normalized();
                prop_assert!(rn.max_exponent().unwrap() < bn.max_exponent().unwrap());
            }
        }
    }

    trait LossyInt {
        fn to_integer_lossy(&self) -> i64;
    }
    impl LossyInt for Rat {
        fn to_integer_lossy(&self) -> i64 {
            self.numer() / self.denom()
        }
    }
}
