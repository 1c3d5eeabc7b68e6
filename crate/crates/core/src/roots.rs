//! Real root isolation with exact rational endpoints.
//!
//! Roots of a square-free integer polynomial are counted with a Sturm
//! sequence, separated by bisection, and then refined by sign changes.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::upoly::IntPoly;

/// A real root known to lie in `[lo, hi]`. When `lo == hi` the root is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

struct Sturm {
    chain: Vec<IntPoly>,
}

impl Sturm {
    fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let r = chain[n - 2].pseudo_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // pseudo_rem scales by a positive factor, so this keeps the signs
            // of -rem; dividing by the positive content does too.
            let content = r.content();
            let r = -&IntPoly::new(r.coeffs().iter().map(|c| c / &content).collect());
            chain.push(r);
        }
        Self { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

fn two() -> BigInt {
    BigInt::from(2)
}

/// Isolates every real root of `p` in `(lo, hi]`, sorted increasingly, each
/// interval refined to width at most `tol`.
pub fn isolate_real_roots(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
    tol: &BigRational,
) -> Vec<RootInterval> {
    let sf = p.square_free_part();
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sturm = Sturm::new(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        match sturm.count(&a, &b) {
            0 => {}
            1 => out.push(refine(&sf, &sturm, a, b, tol)),
            _ => {
                let m = (&a + &b) / two();
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Shrinks `(a, b]`, which holds exactly one root, to width `tol`.
fn refine(
    p: &IntPoly,
    sturm: &Sturm,
    a: BigRational,
    b: BigRational,
    tol: &BigRational,
) -> RootInterval {
    if p.sign_at(&b) == Ordering::Equal {
        return RootInterval {
            lo: b.clone(),
            hi: b,
        };
    }
    let (mut a, mut b) = (a, b);
    // Move the left end off a root so that signs bracket the root strictly.
    while p.sign_at(&a) == Ordering::Equal {
        let m = (&a + &b) / two();
        if sturm.count(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
    let sa = p.sign_at(&a);
    while &(&b - &a) > tol {
        let m = (&a + &b) / two();
        match p.sign_at(&m) {
            Ordering::Equal => {
                return RootInterval {
                    lo: m.clone(),
                    hi: m,
                }
            }
            s if s == sa => a = m,
            _ => b = m,
        }
    }
    RootInterval { lo: a, hi: b }
}

/// `10^-digits` as a rational.
pub fn tolerance(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(digits))
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_positive(x: &BigRational) -> bool {
    x.is_positive() && !x.is_zero()
}
