//! Sparse Laurent polynomials in `q` with big-integer exponents and coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum_k c_k q^k`.
///
/// Only non-zero coefficients are stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<BigInt, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp.into(), c);
        }
        Self { terms }
    }

    /// `q + q^-1`.
    pub fn q_plus_q_inv() -> Self {
        Self::from_terms([(1, 1), (-1, 1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<E, C>(terms: impl IntoIterator<Item = (E, C)>) -> Self
    where
        E: Into<BigInt>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e.into(), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &BigInt) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn coeff_i64(&self, exp: i64) -> BigInt {
        self.coeff(&BigInt::from(exp))
    }

    pub fn min_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&BigInt> {
        self.terms.keys().next_back()
    }

    /// Value at `q = 1`.
    pub fn sum_coeffs(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub(crate) fn add_term(&mut self, exp: BigInt, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, exp: BigInt, c: &BigInt) {
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += other`.
    pub fn add_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term_ref(e.clone(), c);
        }
    }

    /// `self += a * b` without materialising the product.
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(ea + eb, ca * cb);
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by `q^s`.
    pub fn shift(&self, s: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Sends `A q^(d j)` to `A q^(e j)` for every integer `j` (negative and zero
    /// included) and deletes every other term.
    pub fn phi(&self, d: u64, e: u64) -> Self {
        assert!(d >= 1 && e >= 1, "phi requires d, e >= 1");
        if d == 1 && e == 1 {
            return self.clone();
        }
        let d = BigInt::from(d);
        let e = BigInt::from(e);
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let (j, r) = k.div_mod_floor(&d);
            if r.is_zero() {
                terms.insert(j * &e, c.clone());
            }
        }
        Self { terms }
    }

    /// Evaluates at a non-zero rational `q`.
    pub fn eval_rational(&self, q: &BigRational) -> BigRational {
        assert!(!q.is_zero(), "Laurent polynomial evaluated at q = 0");
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let exp: i32 = i32::try_from(e).expect("exponent too large to evaluate");
            acc += BigRational::from_integer(c.clone()) * q.pow(exp);
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e).is_some_and(|d| d == c))
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*q^{e}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_examples() {
        assert_eq!(&lp(&[(1, 1), (-1, 1)]) + &lp(&[(1, -1)]), lp(&[(-1, 1)]));
        let p = lp(&[(3, 2), (-2, 7)]);
        assert_eq!(&p + &LaurentPoly::zero(), p);
        assert_eq!(&lp(&[(1, 4)]) + &lp(&[(4, 5)]), lp(&[(1, 4), (4, 5)]));
    }

    #[test]
    fn mul_examples() {
        let s = LaurentPoly::q_plus_q_inv();
        assert_eq!(&s * &s, lp(&[(2, 1), (0, 2), (-2, 1)]));
        let p = lp(&[(5, -3), (-4, 1)]);
        assert_eq!(&p * &LaurentPoly::one(), p);
        assert_eq!(
            &lp(&[(1, 1), (0, -1)]) * &lp(&[(1, 1), (0, 1)]),
            lp(&[(2, 1), (0, -1)])
        );
    }

    #[test]
    fn phi_examples() {
        assert_eq!(lp(&[(1, 4), (4, 5)]).phi(2, 3), lp(&[(6, 5)]));
        let p = lp(&[(-7, 2), (0, 1), (3, -9)]);
        assert_eq!(p.phi(1, 1), p);
        assert_eq!(
            lp(&[(-3, 1), (2, 1), (0, 7)]).phi(3, 2),
            lp(&[(-2, 1), (0, 7)])
        );
    }

    #[test]
    fn zero_purged_after_cancellation() {
        let p = lp(&[(2, 3)]);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        assert!(lp(&[(5, 0)]).is_zero());
    }

    #[test]
    fn big_exponents() {
        let huge: BigInt = BigInt::from(1u8) << 100usize;
        let p = LaurentPoly::monomial(3, huge.clone());
        let sq = &p * &p;
        assert_eq!(sq.coeff(&(&huge * 2)), BigInt::from(9));
        assert_eq!(p.phi(2, 1).coeff(&(&huge >> 1)), BigInt::from(3));
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(|t| lp(&t))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a * &b).terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn phi_linear(a in small_poly(), b in small_poly(), d in 1u64..5, e in 1u64..5) {
            prop_assert_eq!((&a + &b).phi(d, e), &a.phi(d, e) + &b.phi(d, e));
        }

        #[test]
        fn phi_composes_through_identity_scaling(a in small_poly(), d in 1u64..5, e in 1u64..5) {
            prop_assert_eq!(a.phi(1, d).phi(d, e), a.phi(1, e));
        }
    }
}
