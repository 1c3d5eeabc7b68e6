//! Cogrowth rates for `BS(N,N)`.
//!
//! The exact route specialises the algebraic equation for `G` at `q = 1`,
//! isolates the real roots of its discriminant and leading coefficient, and
//! follows the branch with `G(0) = 1` to find which candidate is its radius
//! of convergence. The estimation route extrapolates coefficient ratios.
//! The module also carries the transforms between all words and freely
//! reduced words, and the closed form for `BS(1,1)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebraic::{build_g_poly, specialize_q};
use crate::error::{Error, Result};
use crate::resultant::{discriminant, PolyOverZz};
use crate::roots::{isolate_real_roots, tolerance, RootInterval};
use crate::solver::cogrowth_coeffs;
use crate::upoly::{bigint_to_f64, IntPoly};
use crate::GroupSpec;

pub const DEFAULT_MAX_N: u64 = 6;
pub const SQRT_12: f64 = 3.464_101_615_137_754_5;
pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Decimal digits to which the radius is isolated.
const ISOLATION_DIGITS: u32 = 24;
/// Distance from a candidate at which the branch is probed.
const PROBE: f64 = 1e-8;
/// Series order used to start the branch and to bound the rate from below.
const SERIES_ORDER: usize = 16;
const START_Z: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Discriminant,
    Ratio,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Discriminant => "discriminant",
            Method::Ratio => "ratio",
        })
    }
}

/// Closed interval with exact rational endpoints, serialised as `"p/q"`
/// strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactInterval {
    pub lo: String,
    pub hi: String,
}

impl From<&RootInterval> for ExactInterval {
    fn from(r: &RootInterval) -> Self {
        Self {
            lo: r.lo.to_string(),
            hi: r.hi.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateResult {
    #[serde(rename = "N")]
    pub n: u64,
    pub method: Method,
    /// Isolating interval for the radius of convergence. Absent for the
    /// ratio method.
    pub z_c: Option<ExactInterval>,
    pub mu: f64,
    pub lambda: f64,
    /// Decimal digits of `mu` that the interval certifies, capped at what a
    /// double can show.
    pub digits: u32,
    /// Crude error bar on `mu`, reported by the ratio method.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<f64>,
}

/// `lambda` with `mu = lambda + 3/lambda`, taking the root at least `sqrt(3)`.
pub fn lambda_from_mu(mu: f64) -> Result<f64> {
    const SLACK: f64 = 1e-12;
    if !(SQRT_12 - SLACK..=4.0 + SLACK).contains(&mu) {
        return Err(Error::OutOfRange {
            name: "mu",
            value: mu,
            low: SQRT_12,
            high: 4.0,
        });
    }
    let disc = (mu * mu - 12.0).max(0.0);
    Ok((mu + disc.sqrt()) / 2.0)
}

pub fn mu_from_lambda(lambda: f64) -> Result<f64> {
    const SLACK: f64 = 1e-12;
    if !(SQRT_3 - SLACK..=3.0 + SLACK).contains(&lambda) {
        return Err(Error::OutOfRange {
            name: "lambda",
            value: lambda,
            low: SQRT_3,
            high: 3.0,
        });
    }
    Ok(lambda + 3.0 / lambda)
}

/// The equation for `G` at `q = 1`, as a polynomial in `G` over `Z[z]`.
pub fn g_poly_at_q1(n: u64) -> Result<PolyOverZz> {
    let p = specialize_q(&build_g_poly(n)?, 2);
    let deg = p.degree_in(0).unwrap_or(0) as usize;
    let mut dense: Vec<Vec<BigInt>> = vec![Vec::new(); deg + 1];
    for (m, c) in p.terms() {
        if m[0] < 0 || m[1] < 0 {
            return Err(Error::Inconsistent(format!("negative exponent in {m:?}")));
        }
        let row = &mut dense[m[0] as usize];
        let ze = m[1] as usize;
        if row.len() <= ze {
            row.resize(ze + 1, BigInt::zero());
        }
        row[ze] += c;
    }
    Ok(dense.into_iter().map(IntPoly::new).collect())
}

/// Positive real roots of the discriminant and of the leading coefficient
/// that lie in `(0, 1/sqrt(12)]`.
pub fn singularity_candidates(p: &[IntPoly]) -> Result<Vec<RootInterval>> {
    let disc = discriminant(p)?;
    let lead = p.last().cloned().unwrap_or_else(IntPoly::zero);
    let product = &disc * &lead;
    if product.is_zero() {
        return Err(Error::Inconsistent(
            "discriminant vanishes identically".into(),
        ));
    }
    let (stripped, _) = product.strip_x_factor();
    let hi = BigRational::new(BigInt::one(), BigInt::from(3));
    let twelve = BigRational::from_integer(BigInt::from(12));
    let roots = isolate_real_roots(
        &stripped,
        &BigRational::zero(),
        &hi,
        &tolerance(ISOLATION_DIGITS),
    );
    Ok(roots
        .into_iter()
        .filter(|r| r.lo.is_positive() || r.hi.is_positive())
        .filter(|r| &twelve * &r.lo * &r.lo <= BigRational::one())
        .collect())
}

struct Branch {
    coeffs: Vec<Vec<f64>>,
}

impl Branch {
    fn new(p: &[IntPoly]) -> Self {
        Self {
            coeffs: p
                .iter()
                .map(|c| c.coeffs().iter().map(bigint_to_f64).collect())
                .collect(),
        }
    }

    fn eval(&self, g: f64, z: f64) -> (f64, f64) {
        let horner = |c: &[f64]| c.iter().rev().fold(0.0, |acc, x| acc * z + x);
        let a: Vec<f64> = self.coeffs.iter().map(|c| horner(c)).collect();
        let mut p = 0.0;
        let mut dp = 0.0;
        for ai in a.iter().rev() {
            dp = dp * g + p;
            p = p * g + ai;
        }
        (p, dp)
    }

    fn newton(&self, mut g: f64, z: f64) -> Option<f64> {
        for _ in 0..100 {
            let (p, dp) = self.eval(g, z);
            if dp == 0.0 || !dp.is_finite() {
                return None;
            }
            let step = p / dp;
            g -= step;
            if step.abs() <= 1e-15 * g.abs().max(1.0) {
                return Some(g);
            }
        }
        Some(g).filter(|g| self.eval(*g, z).0.abs() < 1e-9)
    }

    /// Follows the root through `(z0, g0)` towards `target`, returning its
    /// values at distances `4 * PROBE` and `PROBE` from the target.
    fn follow(&self, z0: f64, g0: f64, target: f64) -> Option<[(f64, f64); 2]> {
        let d0 = target - z0;
        let sign = d0.signum();
        let mut dists = Vec::new();
        let mut d = 0.9 * d0.abs();
        while d > 4.0 * PROBE {
            dists.push(d);
            d *= 0.9;
        }
        dists.push(4.0 * PROBE);
        dists.push(PROBE);

        // Predict linearly in sqrt(distance), which also suits a square-root
        // branch point at the target.
        let mut prev: Option<(f64, f64)> = None;
        let mut cur = (d0.abs().sqrt(), g0);
        let mut probes = Vec::new();
        for (i, &dist) in dists.iter().enumerate() {
            let t = dist.sqrt();
            let guess = match prev {
                Some((t1, g1)) => cur.1 + (cur.1 - g1) / (cur.0 - t1) * (t - cur.0),
                None => cur.1,
            };
            let z = target - sign * dist;
            let g = self.newton(guess, z)?;
            prev = Some(cur);
            cur = (t, g);
            if i + 2 >= dists.len() {
                probes.push((g, self.eval(g, z).1));
            }
        }
        Some([probes[0], probes[1]])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Behaviour {
    Regular,
    BranchPoint,
    Pole,
}

fn classify(probes: [(f64, f64); 2]) -> Behaviour {
    let [(g_far, dp_far), (g_near, dp_near)] = probes;
    let growth = g_near.abs() / g_far.abs();
    if g_near.abs() > 1e4 && (3.0..=5.0).contains(&growth) {
        return Behaviour::Pole;
    }
    // Near a square-root branch point the other colliding root approaches
    // like sqrt(distance), and dP/dG is proportional to that gap.
    let shrink = dp_near.abs() / dp_far.abs();
    if (0.4..=0.6).contains(&shrink) {
        Behaviour::BranchPoint
    } else {
        Behaviour::Regular
    }
}

/// Exact radius of convergence of the cogrowth series of `BS(N,N)`.
pub fn rate_discriminant(n: u64) -> Result<RateResult> {
    rate_discriminant_capped(n, DEFAULT_MAX_N)
}

pub fn rate_discriminant_capped(n: u64, max_n: u64) -> Result<RateResult> {
    if n == 0 || n > max_n {
        return Err(Error::OutOfRange {
            name: "N",
            value: n as f64,
            low: 1.0,
            high: max_n as f64,
        });
    }
    let p = g_poly_at_q1(n)?;
    let candidates = singularity_candidates(&p)?;
    let series = cogrowth_coeffs(GroupSpec::symmetric(n)?, SERIES_ORDER)?;

    let branch = Branch::new(&p);
    let g_start: f64 = series
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * START_Z + bigint_to_f64(c));
    let g_start = branch
        .newton(g_start, START_Z)
        .ok_or_else(|| Error::Inconsistent("series start is not a root".into()))?;

    let z_c = candidates
        .iter()
        .find(|c| {
            let target = c.midpoint_f64();
            branch
                .follow(START_Z, g_start, target)
                .map(|probes| classify(probes) != Behaviour::Regular)
                .unwrap_or(false)
        })
        .cloned()
        .ok_or(Error::NoCandidate(n))?;

    // Trivial words concatenate, so c(n)^(1/n) never exceeds the rate and
    // every c(n) z_c^n is at most 1.
    for (k, c) in series.iter().enumerate().skip(1) {
        let bound = BigRational::from_integer(c.clone()) * z_c.lo.pow(k as i32);
        if bound > BigRational::one() {
            return Err(Error::Inconsistent(format!(
                "selected radius exceeds the bound from c({k})"
            )));
        }
    }
    let mu = BigRational::one() / z_c.midpoint();
    let mu_f = mu.to_f64().unwrap_or(f64::NAN);
    Ok(RateResult {
        n,
        method: Method::Discriminant,
        z_c: Some((&z_c).into()),
        mu: mu_f,
        lambda: lambda_from_mu(mu_f)?,
        digits: certified_digits(&z_c),
        error: None,
    })
}

fn certified_digits(r: &RootInterval) -> u32 {
    if r.lo == r.hi {
        return 15;
    }
    let rel = (r.width() / &r.lo).to_f64().unwrap_or(1.0);
    (-rel.log10()).floor().clamp(0.0, 15.0) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Correction {
    None,
    N2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioEstimate {
    pub mu: f64,
    pub error: f64,
    /// Extrapolants at the top Richardson level, oldest first.
    pub extrapolants: Vec<f64>,
}

pub const MIN_EVEN_TERMS: usize = 4;
const RICHARDSON_LEVELS: usize = 2;

/// Estimates the growth rate from even-index coefficients.
///
/// Successive ratios `c(n+2)/c(n)` approach `mu^2`; with `Correction::N2`
/// they are first multiplied by `((n+2)/n)^2`. The ratio sequence is then
/// extrapolated to `1/n = 0` through up to two Richardson levels.
pub fn rate_ratio(cogrowth: &[BigInt], correction: Correction) -> Result<RatioEstimate> {
    let even: Vec<(usize, &BigInt)> = cogrowth.iter().enumerate().step_by(2).collect();
    let nonzero = even.iter().filter(|(_, c)| !c.is_zero()).count();
    if nonzero < MIN_EVEN_TERMS {
        return Err(Error::InsufficientTerms {
            needed: MIN_EVEN_TERMS,
            have: nonzero,
        });
    }
    let skip = usize::from(correction == Correction::N2);
    let mut points: Vec<(BigRational, BigRational)> = Vec::new();
    for w in even.windows(2).skip(skip) {
        let ((n, cn), (_, cn2)) = (w[0], w[1]);
        if cn.is_zero() {
            return Err(Error::Inconsistent(format!("c({n}) is zero")));
        }
        let mut r = BigRational::new(cn2.clone(), cn.clone());
        if correction == Correction::N2 {
            let f = BigRational::new(BigInt::from(n + 2), BigInt::from(n));
            r = r * &f * &f;
        }
        let x = BigRational::new(BigInt::one(), BigInt::from(n.max(1)));
        points.push((x, r));
    }
    if points.len() < 2 {
        return Err(Error::InsufficientTerms {
            needed: MIN_EVEN_TERMS,
            have: nonzero,
        });
    }
    let levels = RICHARDSON_LEVELS.min(points.len() - 2);
    let window = levels + 1;
    let extrapolants: Vec<f64> = points
        .windows(window)
        .map(|w| neville_at_zero(w).to_f64().unwrap_or(f64::NAN).sqrt())
        .collect();
    let mu = *extrapolants.last().unwrap();
    let error = if extrapolants.len() >= 2 {
        (mu - extrapolants[extrapolants.len() - 2]).abs()
    } else {
        0.0
    };
    Ok(RatioEstimate {
        mu,
        error,
        extrapolants,
    })
}

/// Value at `x = 0` of the interpolating polynomial through `points`.
fn neville_at_zero(points: &[(BigRational, BigRational)]) -> BigRational {
    let mut p: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let k = points.len();
    for level in 1..k {
        for i in 0..k - level {
            let (xi, xj) = (&points[i].0, &points[i + level].0);
            p[i] = (xj * &p[i] - xi * &p[i + 1]) / (xj - xi);
        }
    }
    p.swap_remove(0)
}

pub fn rate_ratio_result(
    n: u64,
    cogrowth: &[BigInt],
    correction: Correction,
) -> Result<RateResult> {
    let est = rate_ratio(cogrowth, correction)?;
    Ok(RateResult {
        n,
        method: Method::Ratio,
        z_c: None,
        mu: est.mu,
        lambda: lambda_from_mu(est.mu.clamp(SQRT_12, 4.0))?,
        digits: if est.error > 0.0 {
            (-(est.error / est.mu).log10()).floor().clamp(0.0, 15.0) as u32
        } else {
            15
        },
        error: Some(est.error),
    })
}

/// Truncated power series with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[BigInt], order: usize) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
            order,
        )
    }

    /// A polynomial given by small integer coefficients.
    pub fn poly(coeffs: &[i64], order: usize) -> Self {
        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_integers(&big[..big.len().min(order + 1)], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    /// The coefficients as integers, if every one is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                    .sum()
            })
            .collect();
        Self { coeffs }
    }

    /// Multiplicative inverse; the constant term must be non-zero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Inconsistent(
                "series with zero constant term has no inverse".into(),
            ));
        }
        let inv0 = c0.recip();
        let mut out = vec![inv0.clone()];
        for n in 1..=self.order() {
            let s: BigRational = (1..=n).map(|i| &self.coeffs[i] * &out[n - i]).sum();
            out.push(-s * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    /// Square root with constant term 1; the series must start with 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Inconsistent(
                "square root needs constant term 1".into(),
            ));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut out = vec![BigRational::one()];
        for n in 1..=self.order() {
            let s: BigRational = (1..n).map(|i| &out[i] * &out[n - i]).sum();
            out.push((&self.coeffs[n] - s) * &half);
        }
        Ok(Self { coeffs: out })
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Inconsistent("inner series must vanish at 0".into()));
        }
        let order = self.order().min(inner.order());
        let inner = Self::from_coeffs(inner.coeffs[..=order].to_vec(), order);
        let mut acc = Self::from_coeffs(Vec::new(), order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}

/// Counts of freely reduced trivial words from counts of all trivial words,
/// for a group on `p` generators.
pub fn reduced_from_all(c: &RationalSeries, p: u32) -> Result<RationalSeries> {
    if !c.coeff(0).is_one() {
        return Err(Error::Inconsistent(
            "series must have constant term 1".into(),
        ));
    }
    let order = c.order();
    let k = 2 * p as i64 - 1;
    let denom_inv = RationalSeries::poly(&[1, 0, k], order).inverse()?;
    let u = RationalSeries::poly(&[0, 1], order).mul(&denom_inv);
    let prefactor = RationalSeries::poly(&[1, 0, -1], order).mul(&denom_inv);
    Ok(prefactor.mul(&c.compose(&u)?))
}

/// Inverse of [`reduced_from_all`].
pub fn all_from_reduced(d: &RationalSeries, p: u32) -> Result<RationalSeries> {
    let order = d.order();
    let k = 2 * p as i64 - 1;
    let p = p as i64;
    // One extra term so that (1 - s)/z keeps full order.
    let s = RationalSeries::poly(&[1, 0, -4 * k], order + 1).sqrt()?;
    let scale = BigRational::new(BigInt::one(), BigInt::from(2 * k));
    let v = RationalSeries::from_coeffs(
        std::iter::once(BigRational::zero())
            .chain(s.coeffs[2..].iter().map(|c| -c * &scale))
            .collect(),
        order,
    );
    let s = RationalSeries::from_coeffs(s.coeffs[..=order].to_vec(), order);
    let numer =
        RationalSeries::poly(&[1 - p], order).add(&s.scale(&BigRational::from_integer(p.into())));
    let denom_inv = RationalSeries::poly(&[1, 0, -4 * p * p], order).inverse()?;
    Ok(numer.mul(&denom_inv).mul(&d.compose(&v)?))
}

/// Cogrowth of `BS(1,1) = Z^2`: `c(n) = binom(n, n/2)^2` for even `n`.
pub fn bs11_exact(nmax: usize) -> Result<Vec<BigInt>> {
    let mut out = vec![BigInt::zero(); nmax + 1];
    let mut central = BigInt::one();
    for n in (0..=nmax).step_by(2) {
        if n > 0 {
            let h = n / 2;
            // binom(2h, h) = binom(2h-2, h-1) * (2h)(2h-1) / h^2
            central = central * BigInt::from(n * (n - 1)) / BigInt::from(h * h);
        }
        out[n] = &central * &central;
    }
    for n in (0..nmax.saturating_sub(1)).step_by(2) {
        let half = BigInt::from(n / 2 + 1);
        let lhs = &half * &half * &out[n + 2];
        let rhs = BigInt::from(4 * (n + 1) * (n + 1)) * &out[n];
        if lhs != rhs {
            return Err(Error::Inconsistent(format!("recurrence fails at n = {n}")));
        }
    }
    Ok(out)
}
