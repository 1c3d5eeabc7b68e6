//! Cyclotomic polynomials and exact arithmetic in `Z[w]/Phi_N(w)`, where the
//! class of `w` is a primitive `N`-th root of unity.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::upoly::IntPoly;

/// `Phi_N`, obtained by dividing `w^N - 1` by `Phi_d` for every proper
/// divisor `d` of `N`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let n = n as usize;
    let mut table: Vec<Option<IntPoly>> = vec![None; n + 1];
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mut p = &IntPoly::monomial(BigInt::one(), d) - &IntPoly::one();
        for (e, phi_e) in table.iter().enumerate().take(d).skip(1) {
            if d.is_multiple_of(e) {
                let phi_e = phi_e.as_ref().expect("divisors of a divisor come first");
                p = p
                    .div_exact(phi_e)
                    .expect("cyclotomic factors divide exactly");
            }
        }
        table[d] = Some(p);
    }
    table[n].take().unwrap()
}

/// The ring `Z[w]/Phi_N(w)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloRing {
    n: u64,
    modulus: IntPoly,
}

impl CycloRing {
    pub fn new(n: u64) -> Arc<Self> {
        Arc::new(Self {
            n,
            modulus: cyclotomic(n),
        })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Degree of the extension, `phi(N)`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }
}

/// An element `sum_i c_i w^i` with `i < deg Phi_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloInt {
    ring: Arc<CycloRing>,
    value: IntPoly,
}

impl CycloInt {
    pub fn new(ring: &Arc<CycloRing>, value: IntPoly) -> Self {
        Self {
            value: value.rem_monic(&ring.modulus),
            ring: Arc::clone(ring),
        }
    }

    pub fn from_int(ring: &Arc<CycloRing>, c: impl Into<BigInt>) -> Self {
        Self::new(ring, IntPoly::constant(c.into()))
    }

    /// `omega^j` for any integer `j`, negative exponents included.
    pub fn root_power(ring: &Arc<CycloRing>, j: i64) -> Self {
        let e = j.rem_euclid(ring.n as i64) as usize;
        Self::new(ring, IntPoly::monomial(BigInt::one(), e))
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    /// Coefficients on the basis `1, w, ..., w^(deg-1)`.
    pub fn components(&self) -> &[BigInt] {
        self.value.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The rational-integer value, if every `w`-component vanishes.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.value.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.value.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        Self {
            ring: Arc::clone(&self.ring),
            value: &self.value + &other.value,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            ring: Arc::clone(&self.ring),
            value: -&self.value,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        Self::new(&self.ring, &self.value * &other.value)
    }
}

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.value.to_string().replace('x', "w"))
    }
}
