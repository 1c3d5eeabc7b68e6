//! Britton normal forms for `BS(N,M)` and exact word counts by dynamic
//! programming over group elements.
//!
//! Every element has a unique normal form `P a^k` where the prefix `P` is a
//! freely reduced word in the tokens `a^i b` (`0 <= i < N`) and `a^i b^-1`
//! (`0 <= i < M`). Multiplying on the right by a generator only touches the
//! last prefix token and the exponent, which is what makes the counting DP
//! cheap: words are merged as soon as they reach the same element.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::laurent::LaurentPoly;
use crate::series::TruncatedSeries;

/// Environment variable that overrides [`DEFAULT_MAX_LENGTH`].
pub const GUARD_ENV: &str = "COGROWTH_ORACLE_MAX_LEN";

/// Default largest word length accepted by [`count_tables`].
pub const DEFAULT_MAX_LENGTH: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "a",
            Letter::AInv => "A",
            Letter::B => "b",
            Letter::BInv => "B",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

/// The prefix token `a^power b^sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Token {
    pub power: u64,
    pub sign: Sign,
}

impl Token {
    pub fn new(power: u64, sign: Sign) -> Self {
        Self { power, sign }
    }
}

/// Normal form `prefix * a^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    prefix: Vec<Token>,
    exponent: BigInt,
}

impl GroupElement {
    pub fn identity() -> Self {
        Self {
            prefix: Vec::new(),
            exponent: BigInt::zero(),
        }
    }

    /// `a^k`.
    pub fn power_of_a(k: impl Into<BigInt>) -> Self {
        Self {
            prefix: Vec::new(),
            exponent: k.into(),
        }
    }

    /// Builds a normal form from parts, checking the token ranges and that no
    /// adjacent pair cancels.
    pub fn from_parts(
        spec: GroupSpec,
        prefix: Vec<Token>,
        exponent: impl Into<BigInt>,
    ) -> Result<Self> {
        for (i, t) in prefix.iter().enumerate() {
            let bound = match t.sign {
                Sign::Pos => spec.n(),
                Sign::Neg => spec.m(),
            };
            if t.power >= bound {
                return Err(Error::Inconsistent(format!(
                    "token {i} has power {} outside [0, {bound})",
                    t.power
                )));
            }
            if i > 0 && t.power == 0 && t.sign != prefix[i - 1].sign {
                return Err(Error::Inconsistent(format!(
                    "tokens {} and {i} cancel",
                    i - 1
                )));
            }
        }
        Ok(Self {
            prefix,
            exponent: exponent.into(),
        })
    }

    pub fn prefix(&self) -> &[Token] {
        &self.prefix
    }

    pub fn exponent(&self) -> &BigInt {
        &self.exponent
    }

    /// Whether the element lies in `<a>`.
    pub fn in_a_subgroup(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.prefix.is_empty() && self.exponent.is_zero()
    }

    /// Normal form `b^sign a^j` for some `j`.
    fn is_single_bare_token(&self, sign: Sign) -> bool {
        self.prefix.len() == 1 && self.prefix[0] == Token::new(0, sign)
    }

    /// Right multiplication by a generator.
    pub fn mul_generator(&self, letter: Letter, spec: GroupSpec) -> Self {
        let mut out = self.clone();
        out.mul_generator_in_place(letter, spec);
        out
    }

    fn mul_generator_in_place(&mut self, letter: Letter, spec: GroupSpec) {
        match letter {
            Letter::A => self.exponent += 1,
            Letter::AInv => self.exponent -= 1,
            Letter::B => self.push_stable_letter(Sign::Pos, spec.n(), spec.m()),
            Letter::BInv => self.push_stable_letter(Sign::Neg, spec.m(), spec.n()),
        }
    }

    /// Appends `b^sign` using `a^(j*from) b^sign = b^sign a^(j*to)`.
    fn push_stable_letter(&mut self, sign: Sign, from: u64, to: u64) {
        let (j, r) = self.exponent.div_mod_floor(&BigInt::from(from));
        let shifted = j * BigInt::from(to);
        let cancels = r.is_zero() && self.prefix.last().is_some_and(|t| t.sign != sign);
        if cancels {
            let t = self.prefix.pop().expect("checked non-empty");
            self.exponent = shifted + t.power;
        } else {
            let power = u64::try_from(&r).expect("remainder is below the modulus");
            self.prefix.push(Token::new(power, sign));
            self.exponent = shifted;
        }
    }

    /// Evaluates a word from the identity.
    pub fn from_word(word: &[Letter], spec: GroupSpec) -> Self {
        let mut g = Self::identity();
        for &l in word {
            g.mul_generator_in_place(l, spec);
        }
        g
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.prefix {
            if t.power > 0 {
                write!(f, "a^{} ", t.power)?;
            }
            match t.sign {
                Sign::Pos => write!(f, "b ")?,
                Sign::Neg => write!(f, "b^-1 ")?,
            }
        }
        write!(f, "a^{}", self.exponent)
    }
}

/// Parses words such as `"a a^-1 b"`, `"a² b a⁻²"` or `"aaBA"`. Upper-case
/// letters denote inverses. Whitespace is ignored.
pub fn parse_word(word: &str) -> Result<Vec<Letter>> {
    let chars: Vec<(usize, char)> = word.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let (base, inverted) = match c {
            c if c.is_whitespace() || c == '*' || c == '.' => continue,
            'a' => (Letter::A, false),
            'A' => (Letter::A, true),
            'b' => (Letter::B, false),
            'B' => (Letter::B, true),
            other => {
                return Err(Error::MalformedWord {
                    position: pos,
                    found: other.to_string(),
                })
            }
        };
        let (exp, next) = parse_exponent(&chars, i)?;
        i = next;
        let mut letter = if inverted { base.inverse() } else { base };
        if exp < 0 {
            letter = letter.inverse();
        }
        for _ in 0..exp.unsigned_abs() {
            out.push(letter);
        }
    }
    Ok(out)
}

fn superscript_digit(c: char) -> Option<u32> {
    match c {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴'..='⁹' => Some(c as u32 - '⁴' as u32 + 4),
        _ => None,
    }
}

/// Parses an optional exponent (`^-2`, `^3`, `⁻¹`, `²`) starting at `i`.
fn parse_exponent(chars: &[(usize, char)], mut i: usize) -> Result<(i64, usize)> {
    let malformed = |i: usize| {
        let (position, found) = chars.get(i).map(|&(p, c)| (p, c.to_string())).unwrap_or((
            chars.last().map_or(0, |&(p, _)| p + 1),
            "end of input".into(),
        ));
        Error::MalformedWord { position, found }
    };
    if i < chars.len() && chars[i].1 == '^' {
        i += 1;
        let mut neg = false;
        if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '−') {
            neg = true;
            i += 1;
        }
        let start = i;
        let mut val: i64 = 0;
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            val = val * 10 + chars[i].1.to_digit(10).unwrap() as i64;
            i += 1;
        }
        if i == start {
            return Err(malformed(i));
        }
        return Ok((if neg { -val } else { val }, i));
    }
    let mut neg = false;
    if i < chars.len() && chars[i].1 == '⁻' {
        neg = true;
        i += 1;
    }
    let start = i;
    let mut val: i64 = 0;
    while let Some(d) = chars.get(i).and_then(|&(_, c)| superscript_digit(c)) {
        val = val * 10 + d as i64;
        i += 1;
    }
    if i == start {
        if neg {
            return Err(malformed(i));
        }
        return Ok((1, i));
    }
    Ok((if neg { -val } else { val }, i))
}

/// Normal form of a word given as text.
pub fn normal_form(word: &str, spec: GroupSpec) -> Result<GroupElement> {
    Ok(GroupElement::from_word(&parse_word(word)?, spec))
}

pub fn inverse_word(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.inverse()).collect()
}

/// Largest length accepted by [`count_tables`], honouring [`GUARD_ENV`].
pub fn length_guard() -> usize {
    std::env::var(GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_LENGTH)
}

/// Exact counts `g_{n,k}`, `l_{n,k}`, `k_{n,k}` for `n <= nmax` (stored as
/// series in `z` with `q` tracking the `a`-exponent) and the freely reduced
/// trivial-word counts `d(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub spec: GroupSpec,
    pub nmax: usize,
    pub g: TruncatedSeries,
    pub l: TruncatedSeries,
    pub k: TruncatedSeries,
    pub d: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    G,
    L,
    K,
    D,
}

impl CountTable {
    pub fn family(&self, family: Family) -> Option<&TruncatedSeries> {
        match family {
            Family::G => Some(&self.g),
            Family::L => Some(&self.l),
            Family::K => Some(&self.k),
            Family::D => None,
        }
    }

    /// `g_n`: the number of length-`n` words in `<a>`.
    pub fn g_total(&self, n: usize) -> BigInt {
        self.g.at(n).sum_coeffs()
    }
}

/// Which prefixes a counted word must avoid.
#[derive(Clone, Copy)]
enum Avoid {
    Nothing,
    /// Normal form `b^-1 a^j`: the family `L`.
    BInvPower,
    /// Normal form `b a^j`: the family `K`.
    BPower,
}

impl Avoid {
    fn allows(self, g: &GroupElement) -> bool {
        match self {
            Avoid::Nothing => true,
            Avoid::BInvPower => !g.is_single_bare_token(Sign::Neg),
            Avoid::BPower => !g.is_single_bare_token(Sign::Pos),
        }
    }
}

type Layer<S> = HashMap<S, BigInt>;

/// Advances every state by one letter, merging equal successors.
fn step<S, F>(layer: &Layer<S>, expand: F) -> Layer<S>
where
    S: Clone + Eq + std::hash::Hash + Send + Sync,
    F: Fn(&S, &mut dyn FnMut(S)) + Sync,
{
    layer
        .par_iter()
        .fold(HashMap::new, |mut acc: Layer<S>, (state, count)| {
            expand(state, &mut |next: S| {
                *acc.entry(next).or_insert_with(BigInt::zero) += count;
            });
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            if a.len() < b.len() {
                return merge(b, a);
            }
            for (s, c) in b {
                *a.entry(s).or_insert_with(BigInt::zero) += c;
            }
            a
        })
}

fn merge<S: Eq + std::hash::Hash>(mut big: Layer<S>, small: Layer<S>) -> Layer<S> {
    for (s, c) in small {
        *big.entry(s).or_insert_with(BigInt::zero) += c;
    }
    big
}

fn count_family(spec: GroupSpec, nmax: usize, avoid: Avoid) -> TruncatedSeries {
    let mut layer: Layer<GroupElement> = HashMap::new();
    layer.insert(GroupElement::identity(), BigInt::one());
    let mut coeffs = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        coeffs.push(read_subgroup(&layer));
        if n == nmax {
            break;
        }
        // A prefix of t tokens needs at least t more letters to cancel.
        let budget = nmax - n - 1;
        layer = step(&layer, |g, emit| {
            for l in Letter::ALL {
                let next = g.mul_generator(l, spec);
                if next.prefix.len() <= budget && avoid.allows(&next) {
                    emit(next);
                }
            }
        });
    }
    TruncatedSeries::from_coeffs(coeffs, nmax)
}

fn read_subgroup(layer: &Layer<GroupElement>) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (g, c) in layer {
        if g.in_a_subgroup() {
            p.add_term(g.exponent.clone(), c.clone());
        }
    }
    p
}

fn count_reduced_trivial(spec: GroupSpec, nmax: usize) -> Vec<BigInt> {
    let mut layer: Layer<(GroupElement, Option<Letter>)> = HashMap::new();
    layer.insert((GroupElement::identity(), None), BigInt::one());
    let mut out = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        out.push(
            layer
                .iter()
                .filter(|((g, _), _)| g.is_identity())
                .map(|(_, c)| c.clone())
                .sum(),
        );
        if n == nmax {
            break;
        }
        let budget = nmax - n - 1;
        layer = step(&layer, |(g, last), emit| {
            for l in Letter::ALL {
                if last.is_some_and(|p| p == l.inverse()) {
                    continue;
                }
                let next = g.mul_generator(l, spec);
                if next.prefix.len() <= budget {
                    emit((next, Some(l)));
                }
            }
        });
    }
    out
}

/// Counts words of every length up to `nmax`.
pub fn count_tables(spec: GroupSpec, nmax: usize) -> Result<CountTable> {
    let guard = length_guard();
    if nmax > guard {
        return Err(Error::GuardExceeded {
            requested: nmax,
            guard,
            env_var: GUARD_ENV,
        });
    }
    let ((g, l), (k, d)) = rayon::join(
        || {
            rayon::join(
                || count_family(spec, nmax, Avoid::Nothing),
                || count_family(spec, nmax, Avoid::BInvPower),
            )
        },
        || {
            rayon::join(
                || count_family(spec, nmax, Avoid::BPower),
                || count_reduced_trivial(spec, nmax),
            )
        },
    );
    Ok(CountTable {
        spec,
        nmax,
        g,
        l,
        k,
        d,
    })
}

/// An exponent `k*` maximising `g_{n,k}`, with ties broken toward the smallest
/// `|k|` and then the non-negative value.
pub fn most_popular(table: &CountTable, n: usize) -> Result<(BigInt, BigInt)> {
    if n > table.nmax {
        return Err(Error::LengthOutOfRange {
            n,
            nmax: table.nmax,
        });
    }
    let best = table
        .g
        .at(n)
        .terms()
        .max_by(|(ka, ca), (kb, cb)| {
            ca.cmp(cb)
                .then_with(|| kb.abs().cmp(&ka.abs()))
                .then_with(|| ka.cmp(kb))
        })
        .map(|(k, c)| (k.clone(), c.clone()));
    Ok(best.unwrap_or_else(|| (BigInt::zero(), BigInt::zero())))
}

/// Membership in `L` checked directly from the definition: the word is in
/// `<a>` and no prefix has normal form `b^-1 a^j`.
pub fn in_l_by_prefix_scan(word: &[Letter], spec: GroupSpec) -> bool {
    let mut g = GroupElement::identity();
    for &l in word {
        g.mul_generator_in_place(l, spec);
        if g.is_single_bare_token(Sign::Neg) {
            return false;
        }
    }
    g.in_a_subgroup()
}
