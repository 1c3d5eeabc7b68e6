//! Polynomial equations for `L0 = Phi_{N,N} L` and `G` in `BS(N,N)`.
//!
//! Summing `L(z; omega^j q)` over the `N`-th roots of unity isolates `L0`, and
//! since `L = (1 - z^2 L0^2) / D(q)` with `D(q) = 1 - z(q + 1/q) - 2 z^2 L0`
//! this gives
//!
//! ```text
//! N L0 prod_j D(omega^j q) = (1 - z^2 L0^2) sum_j prod_{l != j} D(omega^l q).
//! ```
//!
//! Both sides are symmetric in the roots, so expanding with `omega` held in
//! `Z[w]/Phi_N(w)` must leave only rational-integer coefficients. Replacing
//! `L0` by `1/(2z^2) - Q/(2z) - 1/(2 z^2 G)` yields the equation for `G`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclo::{CycloInt, CycloRing};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::multipoly::{IntMultiPoly, MultiPoly};
use crate::series::TruncatedSeries;

/// Variables of [`build_l0_poly`]; `q` may carry negative exponents.
pub const L0_VARS: [&str; 3] = ["L0", "z", "q"];

/// Variables of [`build_g_poly`], with `Q = q + 1/q`.
pub const G_VARS: [&str; 3] = ["G", "z", "Q"];

/// Default largest `N` for the construction.
pub const DEFAULT_MAX_N: u64 = 8;

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidGroup { n, m: n });
    }
    Ok(())
}

/// The cleared equation for `L0` as an integer polynomial in `(L0, z, q)`.
pub fn build_l0_poly(n: u64) -> Result<IntMultiPoly> {
    check_n(n)?;
    let ring = CycloRing::new(n);
    let int = |k: i64| CycloInt::from_int(&ring, k);
    let term = |e: [i64; 3], c: CycloInt| MultiPoly::term(&L0_VARS, e.to_vec(), c);

    let one = term([0, 0, 0], int(1));
    let l0 = term([1, 0, 0], int(1));
    // 1 - 2 z^2 L0, shared by every factor.
    let base = &one - &term([1, 2, 0], int(2));
    let factors: Vec<MultiPoly<CycloInt>> = (0..n as i64)
        .map(|j| {
            let zq = term([0, 1, 1], CycloInt::root_power(&ring, j));
            let zq_inv = term([0, 1, -1], CycloInt::root_power(&ring, -j));
            &(&base - &zq) - &zq_inv
        })
        .collect();

    // prefix[j] = D_0 ... D_{j-1}, suffix[j] = D_j ... D_{N-1}.
    let len = factors.len();
    let mut prefix = vec![one.clone(); len + 1];
    for j in 0..len {
        prefix[j + 1] = &prefix[j] * &factors[j];
    }
    let mut suffix = vec![one.clone(); len + 1];
    for j in (0..len).rev() {
        suffix[j] = &factors[j] * &suffix[j + 1];
    }
    let mut partial_sum = MultiPoly::zero(&L0_VARS);
    for j in 0..len {
        partial_sum = &partial_sum + &(&prefix[j] * &suffix[j + 1]);
    }

    let lhs = (&l0 * &prefix[len]).scale(&int(n as i64));
    let numerator = &one - &term([2, 2, 0], int(1));
    let poly = &lhs - &(&numerator * &partial_sum);

    poly.try_map(|c| {
        c.as_integer().ok_or_else(|| {
            Error::Inconsistent(format!("coefficient {c} keeps a root-of-unity component"))
        })
    })
}

/// Rewrites a Laurent polynomial symmetric under `q -> 1/q` as a polynomial
/// in `Q = q + 1/q`, returned as `{power of Q: coefficient}`.
pub fn symmetric_to_q_basis(p: &LaurentPoly) -> Result<BTreeMap<i64, BigInt>> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    let q_sum = LaurentPoly::q_plus_q_inv();
    while let Some(top) = rest.max_exponent().cloned() {
        let m = i64::try_from(&top).map_err(|_| Error::Inconsistent("exponent overflow".into()))?;
        if m < 0 {
            return Err(Error::Inconsistent(format!("{p} is not symmetric in q")));
        }
        let c = rest.coeff(&top);
        // (q + 1/q)^m has leading term q^m.
        let mut power = LaurentPoly::one();
        for _ in 0..m {
            power = &power * &q_sum;
        }
        rest = &rest - &power.scale(&c);
        out.insert(m, c);
    }
    Ok(out)
}

/// Expands every power of `Q` in a `(G, z, Q)` polynomial into `q + 1/q`,
/// giving a polynomial in `(G, z, q)`.
pub fn expand_q(poly: &IntMultiPoly) -> IntMultiPoly {
    let vars = poly.vars().iter().map(String::as_str).collect::<Vec<_>>();
    let mut out = IntMultiPoly::zero(&vars);
    for (m, c) in poly.terms() {
        let mut power = LaurentPoly::one();
        for _ in 0..m[2] {
            power = &power * &LaurentPoly::q_plus_q_inv();
        }
        for (e, d) in power.terms() {
            let e = i64::try_from(e).expect("small exponent");
            out.add_term(vec![m[0], m[1], e], c * d);
        }
    }
    out
}

/// Divides out integer content and any common monomial, then fixes the sign
/// so the constant term (or the first term, if there is none) is positive.
pub fn normalize(poly: &IntMultiPoly) -> IntMultiPoly {
    if poly.is_zero() {
        return poly.clone();
    }
    let shift: Vec<i64> = poly.monomial_gcd().iter().map(|e| -e).collect();
    let p = poly.shift(&shift);
    let mut g = p.content();
    let lead = p.terms().next().map(|(_, c)| c.clone()).unwrap();
    if lead.is_negative() {
        g = -g;
    }
    p.div_int_exact(&g)
}

/// The normalised equation for `G(z;q)` in `BS(N,N)`, as a polynomial in
/// `(G, z, Q)`.
pub fn build_g_poly(n: u64) -> Result<IntMultiPoly> {
    let l0_poly = build_l0_poly(n)?;
    let degree = l0_poly.degree_in(0).unwrap_or(0);
    let gq = ["G", "z", "q"];
    let one = IntMultiPoly::int(&gq, 1);
    let g = IntMultiPoly::int_var(&gq, "G");
    let z = IntMultiPoly::int_var(&gq, "z");
    let q_sum = &IntMultiPoly::term(&gq, vec![0, 0, 1], BigInt::one())
        + &IntMultiPoly::term(&gq, vec![0, 0, -1], BigInt::one());

    // L0 * 2z^2 G = G - zQG - 1 and the cleared denominator is 2z^2 G.
    let numer = &(&g - &(&(&z * &q_sum) * &g)) - &one;
    let denom = &(&z * &z) * &g.scale_int(2);

    let mut total = IntMultiPoly::zero(&gq);
    for (i, coeff) in l0_poly.collect_in(0) {
        let i = i as u32;
        let coeff = coeff.relabel(&gq, &[0, 1, 2]);
        let piece = &(&coeff * &numer.pow(i, &one)) * &denom.pow(degree as u32 - i, &one);
        total = &total + &piece;
    }

    let mut grouped: BTreeMap<(i64, i64), LaurentPoly> = BTreeMap::new();
    for (m, c) in total.terms() {
        grouped
            .entry((m[0], m[1]))
            .or_default()
            .add_term(BigInt::from(m[2]), c.clone());
    }
    let mut out = IntMultiPoly::zero(&G_VARS);
    for ((ge, ze), lp) in grouped {
        if !lp.is_symmetric() {
            return Err(Error::Inconsistent(format!(
                "coefficient of G^{ge} z^{ze} is not symmetric in q: {lp}"
            )));
        }
        for (qe, c) in symmetric_to_q_basis(&lp)? {
            out.add_term(vec![ge, ze, qe], c);
        }
    }
    Ok(normalize(&out))
}

/// Value substituted for `q` when checking a series against an equation.
#[derive(Clone, Debug, PartialEq)]
pub enum QValue {
    Symbolic,
    Rational(BigRational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    /// Lowest `z`-degree at which the substituted polynomial is non-zero.
    pub first_failure: Option<usize>,
}

/// Substitutes the series `g` for `G` in a `(G, z, Q)` polynomial and checks
/// that the result vanishes through `z^order`.
pub fn verify_series(
    poly: &IntMultiPoly,
    g: &TruncatedSeries,
    qval: &QValue,
    order: usize,
) -> Result<Verification> {
    if order > g.order() {
        return Err(Error::DegreeOutOfRange {
            degree: order,
            order: g.order(),
        });
    }
    let g = g.truncate(order);
    let first_failure = match qval {
        QValue::Symbolic => verify_symbolic(poly, &g)?,
        QValue::Rational(q) => verify_rational(poly, &g, q)?,
    };
    Ok(Verification {
        ok: first_failure.is_none(),
        first_failure,
    })
}

fn verify_symbolic(poly: &IntMultiPoly, g: &TruncatedSeries) -> Result<Option<usize>> {
    let order = g.order();
    let max_g = poly.degree_in(0).unwrap_or(0).max(0) as usize;
    let mut powers = vec![TruncatedSeries::one(order)];
    for i in 1..=max_g {
        powers.push(powers[i - 1].mul(g)?);
    }
    let mut acc = TruncatedSeries::zero(order);
    for (m, c) in poly.terms() {
        let (ge, ze, qe) = (m[0] as usize, m[1] as usize, m[2]);
        let mut q_power = LaurentPoly::constant(c.clone());
        for _ in 0..qe {
            q_power = &q_power * &LaurentPoly::q_plus_q_inv();
        }
        acc = acc.add(&powers[ge].mul_laurent(&q_power).shift_z(ze))?;
    }
    Ok(acc.coeffs().iter().position(|c| !c.is_zero()))
}

fn verify_rational(
    poly: &IntMultiPoly,
    g: &TruncatedSeries,
    q: &BigRational,
) -> Result<Option<usize>> {
    let order = g.order();
    let big_q = q + q.recip();
    let gs: Vec<BigRational> = g.coeffs().iter().map(|c| c.eval_rational(q)).collect();
    let mul = |a: &[BigRational], b: &[BigRational]| -> Vec<BigRational> {
        (0..=order)
            .map(|n| (0..=n).map(|i| &a[i] * &b[n - i]).sum())
            .collect()
    };
    let max_g = poly.degree_in(0).unwrap_or(0).max(0) as usize;
    let mut unit = vec![BigRational::zero(); order + 1];
    unit[0] = BigRational::one();
    let mut powers = vec![unit];
    for i in 1..=max_g {
        let next = mul(&powers[i - 1], &gs);
        powers.push(next);
    }
    let mut acc = vec![BigRational::zero(); order + 1];
    for (m, c) in poly.terms() {
        let (ge, ze, qe) = (m[0] as usize, m[1] as usize, m[2]);
        let factor = BigRational::from_integer(c.clone()) * big_q.pow(qe as i32);
        for n in ze..=order {
            acc[n] += &factor * &powers[ge][n - ze];
        }
    }
    Ok(acc.iter().position(|c| !c.is_zero()))
}

/// Specialises a `(G, z, Q)` polynomial at an integer value of `Q`.
pub fn specialize_q(poly: &IntMultiPoly, q_value: i64) -> IntMultiPoly {
    let vars = ["G", "z"];
    let mut out = IntMultiPoly::zero(&vars);
    let qv = BigInt::from(q_value);
    for (m, c) in poly.terms() {
        out.add_term(vec![m[0], m[1]], c * qv.pow(m[2] as u32));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_symmetric;

    #[test]
    fn l0_poly_degrees() {
        for n in 1..=5 {
            let p = build_l0_poly(n).unwrap();
            assert_eq!(p.degree_in(0), Some(n as i64 + 1), "N = {n}");
        }
        // N = 1: L0 (1 - zQ - 2 z^2 L0) - (1 - z^2 L0^2), quadratic.
        let p = build_l0_poly(1).unwrap();
        assert_eq!(p.len(), 5);
    }

    #[test]
    fn q_basis_conversion() {
        let p = LaurentPoly::from_terms([(2, 3), (0, 5), (-2, 3)]);
        let b = symmetric_to_q_basis(&p).unwrap();
        // 3(q^2 + q^-2) + 5 = 3 Q^2 - 1
        assert_eq!(b.get(&2), Some(&BigInt::from(3)));
        assert_eq!(b.get(&0), Some(&BigInt::from(-1)));
        assert!(symmetric_to_q_basis(&LaurentPoly::monomial(1, -1)).is_err());
    }

    #[test]
    fn g_poly_for_n1_checks_against_series() {
        let p = build_g_poly(1).unwrap();
        assert_eq!(p.degree_in(0), Some(2));
        let s = solve_symmetric(1, 12).unwrap();
        assert!(verify_series(&p, &s.g, &QValue::Symbolic, 12).unwrap().ok);
        let at_one = QValue::Rational(BigRational::one());
        assert!(verify_series(&p, &s.g, &at_one, 12).unwrap().ok);
    }

    #[test]
    fn wrong_group_fails() {
        let p = build_g_poly(2).unwrap();
        let s = solve_symmetric(3, 10).unwrap();
        let v = verify_series(&p, &s.g, &QValue::Symbolic, 10).unwrap();
        assert!(!v.ok);
        assert!(v.first_failure.is_some());
    }

    #[test]
    fn normalisation_fixes_sign_and_content() {
        let v = ["G", "z", "Q"];
        let p = &IntMultiPoly::int(&v, -4) + &IntMultiPoly::int_var(&v, "G").scale_int(6);
        let n = normalize(&p.shift(&[1, 2, 0]));
        assert_eq!(n.to_canonical_text(), "+2 -3*G");
    }
}
