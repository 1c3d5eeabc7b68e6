//! Power series in `z`, truncated at a fixed order, whose coefficients are
//! Laurent polynomials in `q`.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// `sum_{n=0}^{order} c_n(q) z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LaurentPoly::one(), order)
    }

    pub fn constant(c: LaurentPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients beyond the order.
    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, LaurentPoly::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Coefficient of `z^n`.
    pub fn at(&self, n: usize) -> &LaurentPoly {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// The coefficient of `z^n q^k`.
    pub fn coeff(&self, n: usize, k: impl Into<BigInt>) -> Result<BigInt> {
        if n > self.order() {
            return Err(Error::DegreeOutOfRange {
                degree: n,
                order: self.order(),
            });
        }
        Ok(self.coeffs[n].coeff(&k.into()))
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order. Degrees are computed in
    /// parallel; each is an exact sum so the result does not depend on
    /// scheduling.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let coeffs = (0..=self.order())
            .into_par_iter()
            .map(|n| {
                let mut acc = LaurentPoly::zero();
                for i in 0..=n {
                    let (a, b) = (&self.coeffs[i], &other.coeffs[n - i]);
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_product(a, b);
                    }
                }
                acc
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// Multiplies every coefficient by a Laurent polynomial.
    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
        }
    }

    /// Multiplies by `z^s`, dropping what falls beyond the order.
    pub fn shift_z(&self, s: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        if s <= order {
            coeffs[s..].clone_from_slice(&self.coeffs[..=order - s]);
        }
        Self { coeffs }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    /// Applies `Phi_{d,e}` to every `z`-coefficient.
    pub fn phi(&self, d: u64, e: u64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.phi(d, e)).collect(),
        }
    }

    /// `S(z; 1)` as a coefficient list.
    pub fn eval_q1(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(LaurentPoly::sum_coeffs).collect()
    }

    /// `[q^0] S` per `z`-degree.
    pub fn diagonal_q0(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.coeff_i64(0)).collect()
    }

    /// `S(zq; q^-1)`: the term `c z^n q^k` becomes `c z^n q^(n-k)`.
    pub fn substitute_zq_qinv(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.invert_q().shift(&BigInt::from(n)))
                .collect(),
        }
    }

    /// The diagonal `sum_n f_{n,n} z^n`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.coeff(&BigInt::from(n)))
            .collect()
    }

    /// `[q^0] S` computed as the diagonal of `S(zq; q^-1)`.
    pub fn diagonal_q0_via_substitution(&self) -> Vec<BigInt> {
        self.substitute_zq_qinv().diagonal()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*z^{n}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}
