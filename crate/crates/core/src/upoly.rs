//! Dense univariate polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `sum_i coeffs[i] x^i`, with no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Sign of the value at `x`, computed without building rationals.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(deg) = self.degree() else {
            return Ordering::Equal;
        };
        // d^deg p(n/d) = sum c_i n^i d^(deg-i) has the same sign since d > 0.
        let (n, d) = (x.numer(), x.denom());
        let mut dpows = vec![BigInt::one(); deg + 1];
        for i in 1..=deg {
            dpows[i] = &dpows[i - 1] * d;
        }
        let mut total = BigInt::zero();
        let mut npow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            total += c * &npow * &dpows[deg - i];
            npow *= n;
        }
        total.sign().cmp_sign()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Quotient by a divisor that is known to divide exactly over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem_integral(divisor)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!(
                "division of {self} by {divisor} leaves remainder {r}"
            )));
        }
        Ok(q)
    }

    /// Long division that fails if a quotient coefficient is not integral.
    fn div_rem_integral(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Inconsistent("division by zero polynomial".into()))?;
        let lead = divisor.lead();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "non-integral quotient dividing {self} by {divisor}"
                )));
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &Self) -> Self {
        debug_assert!(modulus.lead().is_one());
        let dd = modulus.degree().expect("non-zero modulus");
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = rem.len() - dd;
            for j in 0..dd {
                rem[shift + j] -= &top * &modulus.coeffs[j];
            }
        }
        Self::new(rem)
    }

    /// `c * a mod b` for some positive integer `c`, so signs are preserved.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("non-zero divisor");
        let lb = b.lead();
        let scale = lb.abs();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = if lb.is_negative() {
                -r.lead()
            } else {
                r.lead()
            };
            let t = Self::monomial(lr, dr - db);
            r = &r.scale(&scale) - &(&t * b);
        }
        r
    }

    /// Greatest common divisor up to sign, as a primitive polynomial.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// `p / gcd(p, p')`, primitive.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        let pp = self.primitive_part();
        // g is primitive, so the quotient is integral (Gauss's lemma).
        pp.div_exact(&g)
            .expect("primitive gcd divides exactly")
            .primitive_part()
    }

    /// Drops the factor `x^k` of largest `k`.
    pub fn strip_x_factor(&self) -> (Self, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (
            Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec()),
            k,
        )
    }
}

trait CmpSign {
    fn cmp_sign(self) -> Ordering;
}

impl CmpSign for Sign {
    fn cmp_sign(self) -> Ordering {
        match self {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let sign = if c.is_negative() { '-' } else { '+' };
            match i {
                0 => write!(f, "{sign}{}", c.abs())?,
                1 => write!(f, "{sign}{}*x", c.abs())?,
                _ => write!(f, "{sign}{}*x^{i}", c.abs())?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(p(&[-1, 0, 1]).div_exact(&a).unwrap(), b);
        assert!(p(&[1, 0, 1]).div_exact(&a).is_err());
        assert_eq!((&a - &a), IntPoly::zero());
    }

    #[test]
    fn gcd_and_square_free() {
        // (x-1)^2 (x+2)
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
        assert_eq!(f.square_free_part(), p(&[-2, 1, 1]));
        let g = p(&[0, 0, 6, 3]);
        assert_eq!(g.strip_x_factor(), (p(&[6, 3]), 2));
        assert_eq!(g.primitive_part(), p(&[0, 0, 2, 1]));
    }

    #[test]
    fn signs() {
        let f = p(&[-1, 0, 4]); // roots +-1/2
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.sign_at(&half), Ordering::Equal);
        assert_eq!(
            f.sign_at(&BigRational::new(1.into(), 3.into())),
            Ordering::Less
        );
        assert_eq!(
            f.sign_at(&BigRational::new((-2).into(), 3.into())),
            Ordering::Greater
        );
        assert_eq!(f.eval_rational(&half), BigRational::zero());
    }

    #[test]
    fn monic_remainder() {
        let m = p(&[1, 1, 1]);
        assert_eq!(p(&[-1, 0, 0, 1]).rem_monic(&m), IntPoly::zero());
        assert_eq!(p(&[0, 0, 0, 0, 1]).rem_monic(&m), p(&[0, 1]));
    }
}
