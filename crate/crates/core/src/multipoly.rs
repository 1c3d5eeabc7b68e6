//! Sparse multivariate (Laurent) polynomials over a generic coefficient ring.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclo::CycloInt;
use crate::error::{Error, Result};

/// Ring operations needed by [`MultiPoly`].
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn c_is_zero(&self) -> bool;
    fn c_add(&self, other: &Self) -> Self;
    fn c_mul(&self, other: &Self) -> Self;
    fn c_neg(&self) -> Self;
}

impl Coeff for BigInt {
    fn c_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn c_add(&self, other: &Self) -> Self {
        self + other
    }
    fn c_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn c_neg(&self) -> Self {
        -self
    }
}

impl Coeff for CycloInt {
    fn c_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn c_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn c_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn c_neg(&self) -> Self {
        self.neg()
    }
}

/// Exponent vector, one entry per variable. Entries may be negative.
pub type Monomial = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<C> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(vars: &[&str]) -> Self {
        Self {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    fn empty_like(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `c * prod vars^exps`.
    pub fn term(vars: &[&str], exps: Monomial, c: C) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exps, c);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> Option<&C> {
        self.terms.get(exps)
    }

    pub fn add_term(&mut self, exps: Monomial, c: C) {
        if c.c_is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().c_add(&c);
                if s.c_is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "polynomials over different variables"
        );
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg_poly(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.c_neg()))
                .collect(),
        }
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        self.add_poly(&other.neg_poly())
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.empty_like();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca.c_mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = self.empty_like();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.c_mul(k));
        }
        out
    }

    /// Multiplies by the monomial `prod vars^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// `self^k` for `k >= 1`; `one` is returned for `k = 0`.
    pub fn pow(&self, k: u32, one: &Self) -> Self {
        let mut acc = one.clone();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Largest exponent of a variable, `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|m| m[var]).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|m| m[var]).min()
    }

    /// Groups terms by the exponent of `var`; the returned polynomials keep
    /// all variables but have that exponent set to zero.
    pub fn collect_in(&self, var: usize) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            rest[var] = 0;
            out.entry(m[var])
                .or_insert_with(|| self.empty_like())
                .add_term(rest, c.clone());
        }
        out
    }

    /// Maps coefficients into another ring, failing on the first error.
    pub fn try_map<D: Coeff, F>(&self, mut f: F) -> Result<MultiPoly<D>>
    where
        F: FnMut(&C) -> Result<D>,
    {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Renames and reorders variables. `map[i]` is the new index of old
    /// variable `i`.
    pub fn relabel(&self, new_vars: &[&str], map: &[usize]) -> Self {
        let mut out = Self::zero(new_vars);
        for (m, c) in &self.terms {
            let mut nm = vec![0; new_vars.len()];
            for (i, &e) in m.iter().enumerate() {
                nm[map[i]] += e;
            }
            out.add_term(nm, c.clone());
        }
        out
    }
}

impl<C: Coeff> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        self.add_poly(rhs)
    }
}

impl<C: Coeff> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        self.sub_poly(rhs)
    }
}

impl<C: Coeff> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        self.mul_poly(rhs)
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.neg_poly()
    }
}

/// Integer-coefficient polynomial.
pub type IntMultiPoly = MultiPoly<BigInt>;

impl MultiPoly<BigInt> {
    pub fn int(vars: &[&str], c: i64) -> Self {
        Self::term(vars, vec![0; vars.len()], BigInt::from(c))
    }

    pub fn int_var(vars: &[&str], name: &str) -> Self {
        let i = vars
            .iter()
            .position(|v| *v == name)
            .expect("unknown variable");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::term(vars, e, BigInt::one())
    }

    pub fn one_like(&self) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        Self::int(&vars, 1)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigInt::from(k))
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Largest monomial dividing every term (componentwise minimum).
    pub fn monomial_gcd(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.vars.len()];
        };
        it.fold(first.clone(), |acc, m| {
            acc.iter().zip(m).map(|(a, b)| *a.min(b)).collect()
        })
    }

    pub fn div_int_exact(&self, k: &BigInt) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!((c % k).is_zero());
                    (m.clone(), c / k)
                })
                .collect(),
        }
    }

    /// Canonical text: terms in increasing exponent order (lexicographic in
    /// the variable order), each written as a signed integer followed by its
    /// factors, e.g. `+1 +3*G*z*Q -1*G^2`.
    pub fn to_canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut s = format!("{}{}", if c.is_negative() { '-' } else { '+' }, c.abs());
            for (v, &e) in self.vars.iter().zip(m) {
                match e {
                    0 => {}
                    1 => s.push_str(&format!("*{v}")),
                    _ => s.push_str(&format!("*{v}^{e}")),
                }
            }
            parts.push(s);
        }
        parts.join(" ")
    }

    /// Parses [`to_canonical_text`](Self::to_canonical_text) output.
    pub fn from_canonical_text(vars: &[&str], text: &str) -> Result<Self> {
        let bad = |what: &str| Error::Unsupported(format!("cannot parse polynomial term {what:?}"));
        let mut p = Self::zero(vars);
        if text.trim() == "0" {
            return Ok(p);
        }
        for tok in text.split_whitespace() {
            let mut factors = tok.split('*');
            let c: BigInt = factors
                .next()
                .ok_or_else(|| bad(tok))?
                .parse()
                .map_err(|_| bad(tok))?;
            let mut exps = vec![0i64; vars.len()];
            for f in factors {
                let (name, e) = match f.split_once('^') {
                    Some((n, e)) => (n, e.parse::<i64>().map_err(|_| bad(tok))?),
                    None => (f, 1),
                };
                let i = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| bad(tok))?;
                exps[i] += e;
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            variables: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exponents: m.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let vars: Vec<&str> = j.variables.iter().map(String::as_str).collect();
        let mut p = Self::zero(&vars);
        for t in &j.terms {
            if t.exponents.len() != vars.len() {
                return Err(Error::Unsupported("exponent vector length mismatch".into()));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Unsupported(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(t.exponents.clone(), c);
        }
        Ok(p)
    }
}

/// JSON form of an integer polynomial. Coefficients are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub variables: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<i64>,
    pub coeff: String,
}

impl fmt::Display for MultiPoly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_text())
    }
}
