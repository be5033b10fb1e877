//! Closed-form moment polynomials.
//!
//! A moment formula for `r` distinct coordinates `j_1, ..., j_r` with
//! exponents given by a [`Pattern`] is a polynomial in the trial count `m`
//! and the probabilities `x_{j_1}, ..., x_{j_r}`. The canonical form keeps
//! the `m` part in the falling-factorial basis `m^(0), m^(1), ...`
//! ([`MomentPoly`]); [`to_ordinary`] converts to plain powers of `m`
//! ([`OrdinaryPoly`]) and [`to_falling`] converts back.

mod render;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binomial, falling_factorial, stirling2};
use crate::rational::{from_int, pow};
use crate::{Error, MultiIndex, MultinomialParams, Rational, Result};

pub use render::{render, Format};

/// Exponents over distinct coordinates, kept non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Vec<u32>);

impl Pattern {
    /// Sorts the exponents into canonical non-increasing order. Empty
    /// patterns and zero exponents are rejected.
    pub fn new(mut exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidPattern("pattern is empty".into()));
        }
        if exponents.contains(&0) {
            return Err(Error::InvalidPattern(
                "pattern exponents must be at least 1".into(),
            ));
        }
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Pattern(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    fn as_index(&self) -> MultiIndex {
        MultiIndex::from(self.0.clone())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Degrees of `x_{j_1}, ..., x_{j_r}`; ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(degrees: Vec<u32>) -> Self {
        Monomial(degrees)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }
}

/// How the `m` part of a term is expressed.
pub trait Basis: Clone + fmt::Debug + PartialEq + Eq + Default {
    /// Name used in the JSON encoding.
    const NAME: &'static str;

    /// Value of the degree-`k` basis element at `m`.
    fn value(m: &BigInt, k: u32) -> BigInt;
}

/// `m^(k) = m (m-1) ... (m-k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Falling;

/// `m^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Ordinary;

impl Basis for Falling {
    const NAME: &'static str = "falling";

    fn value(m: &BigInt, k: u32) -> BigInt {
        falling_factorial(m, k as usize)
    }
}

impl Basis for Ordinary {
    const NAME: &'static str = "ordinary";

    fn value(m: &BigInt, k: u32) -> BigInt {
        num_traits::pow(m.clone(), k as usize)
    }
}

/// Sparse integer polynomial in `m` (basis `B`) and the pattern's
/// probability variables. Zero coefficients are never stored; iteration
/// is by ascending `m` degree, then lexicographic monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<B: Basis> {
    pattern: Pattern,
    central: bool,
    terms: BTreeMap<(u32, Monomial), BigInt>,
    basis: PhantomData<B>,
}

pub type MomentPoly = Poly<Falling>;
pub type OrdinaryPoly = Poly<Ordinary>;

impl<B: Basis> Poly<B> {
    pub fn zero(pattern: Pattern, central: bool) -> Self {
        Poly {
            pattern,
            central,
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn is_central(&self) -> bool {
        self.central
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

    /// `(m degree, monomial, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Monomial, &BigInt)> {
        self.terms.iter().map(|((k, mono), c)| (*k, mono, c))
    }

    pub fn coeff(&self, m_degree: u32, monomial: &Monomial) -> BigInt {
        self.terms
            .get(&(m_degree, monomial.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Adds `coeff · m-basis(m_degree) · monomial`, dropping the entry if it
    /// cancels. Panics if the monomial arity does not match the pattern.
    pub fn add_term(&mut self, m_degree: u32, monomial: Monomial, coeff: BigInt) {
        assert_eq!(monomial.arity(), self.pattern.arity(), "monomial arity");
        if coeff.is_zero() {
            return;
        }
        let key = (m_degree, monomial);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Highest `m` degree present, or `None` for the zero polynomial.
    pub fn m_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(k, _)| *k).max()
    }

    /// Substitutes `m` and `x_{j_i} = params.x()[coords[i]]` (zero-based
    /// coordinates, which must be distinct and in range).
    pub fn evaluate(&self, params: &MultinomialParams, coords: &[usize]) -> Result<Rational> {
        if coords.len() != self.pattern.arity() {
            return Err(Error::ArityMismatch {
                expected: self.pattern.arity(),
                found: coords.len(),
            });
        }
        for (i, &c) in coords.iter().enumerate() {
            if c >= params.dim() {
                return Err(Error::CoordinateOutOfRange {
                    index: c,
                    dim: params.dim(),
                });
            }
            if coords[..i].contains(&c) {
                return Err(Error::RepeatedCoordinate(c));
            }
        }
        let m = BigInt::from(params.m());
        let xs: Vec<&Rational> = coords.iter().map(|&c| &params.x()[c]).collect();
        let mut m_cache: HashMap<u32, BigInt> = HashMap::new();
        let mut total = Rational::zero();
        for (k, mono, c) in self.terms() {
            let mk = m_cache.entry(k).or_insert_with(|| B::value(&m, k));
            if mk.is_zero() {
                continue;
            }
            let x_part = xs
                .iter()
                .zip(mono.degrees())
                .fold(Rational::one(), |acc, (xi, &e)| acc * pow(xi, e));
            total += from_int(c * &*mk) * x_part;
        }
        Ok(total)
    }

    /// Swaps the roles of two pattern coordinates.
    pub fn swap_variables(&self, a: usize, b: usize) -> Self {
        let mut out = Poly::zero(self.pattern.clone(), self.central);
        for (k, mono, c) in self.terms() {
            let mut degrees = mono.degrees().to_vec();
            degrees.swap(a, b);
            out.add_term(k, Monomial(degrees), c.clone());
        }
        out
    }

    pub(crate) fn from_parts(pattern: Pattern, central: bool) -> Self {
        Self::zero(pattern, central)
    }
}

/// Non-central moment `E[Π ξ_{j_i}^{p_i}]` as
/// `Σ_k m^(Σk) Π S2(p_i, k_i) x_{j_i}^{k_i}`, omitting vanishing Stirling
/// terms.
pub fn symbolic_noncentral(pattern: &Pattern) -> MomentPoly {
    let mut poly = MomentPoly::zero(pattern.clone(), false);
    let p = pattern.as_index();
    for k in p.dominated() {
        let weight: BigUint = p
            .exponents()
            .iter()
            .zip(k.exponents())
            .map(|(&pi, &ki)| stirling2(pi as usize, ki as usize))
            .product();
        if weight.is_zero() {
            continue;
        }
        poly.add_term(
            k.order() as u32,
            Monomial(k.exponents().to_vec()),
            BigInt::from(weight),
        );
    }
    poly
}

/// Falling-basis coefficients of `m^(a) · m^s`, indexed by falling degree.
///
/// Uses `m · m^(j) = m^(j+1) + j m^(j)`.
fn shift_falling(a: u32, s: u32) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); (a + s + 1) as usize];
    coeffs[a as usize] = BigInt::one();
    for _ in 0..s {
        let mut next = vec![BigInt::zero(); coeffs.len()];
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[j + 1] += c;
            next[j] += c * j;
        }
        coeffs = next;
    }
    coeffs
}

/// Central moment `E[Π (ξ_{j_i} - m x_{j_i})^{p_i}]`, with all terms of
/// the double expansion over `ℓ <= p` and `k <= ℓ` merged in the falling
/// basis.
pub fn symbolic_central(pattern: &Pattern) -> MomentPoly {
    let mut poly = MomentPoly::zero(pattern.clone(), true);
    let p = pattern.as_index();
    let mut shifts: HashMap<(u32, u32), Vec<BigInt>> = HashMap::new();
    for l in p.dominated() {
        let binom: BigUint = p
            .exponents()
            .iter()
            .zip(l.exponents())
            .map(|(&pi, &li)| binomial(pi as usize, li as usize))
            .product();
        let s = (p.order() - l.order()) as u32;
        let sign = if s.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        let outer = BigInt::from(binom) * sign;
        for k in l.dominated() {
            let weight: BigUint = l
                .exponents()
                .iter()
                .zip(k.exponents())
                .map(|(&li, &ki)| stirling2(li as usize, ki as usize))
                .product();
            if weight.is_zero() {
                continue;
            }
            let coeff = &outer * BigInt::from(weight);
            let degrees: Vec<u32> = p
                .exponents()
                .iter()
                .zip(l.exponents().iter().zip(k.exponents()))
                .map(|(&pi, (&li, &ki))| pi - li + ki)
                .collect();
            let a = k.order() as u32;
            let expansion = shifts.entry((a, s)).or_insert_with(|| shift_falling(a, s));
            for (j, c) in expansion.iter().enumerate() {
                if !c.is_zero() {
                    poly.add_term(j as u32, Monomial(degrees.clone()), &coeff * c);
                }
            }
        }
    }
    poly
}

/// Ordinary-power coefficients of `m^(k)`, indexed by power.
fn falling_to_powers(k: u32) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for i in 0..k {
        // multiply by (m - i)
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * i;
        }
        coeffs = next;
    }
    coeffs
}

/// Rewrites every `m^(k)` as a polynomial in plain powers of `m`.
pub fn to_ordinary(poly: &MomentPoly) -> OrdinaryPoly {
    let mut out = OrdinaryPoly::from_parts(poly.pattern.clone(), poly.central);
    let mut cache: HashMap<u32, Vec<BigInt>> = HashMap::new();
    for (k, mono, c) in poly.terms() {
        let expansion = cache.entry(k).or_insert_with(|| falling_to_powers(k));
        for (j, e) in expansion.iter().enumerate() {
            if !e.is_zero() {
                out.add_term(j as u32, mono.clone(), c * e);
            }
        }
    }
    out
}

/// Rewrites every `m^j` as `Σ_k S2(j, k) m^(k)`.
pub fn to_falling(poly: &OrdinaryPoly) -> MomentPoly {
    let mut out = MomentPoly::from_parts(poly.pattern.clone(), poly.central);
    for (j, mono, c) in poly.terms() {
        for k in 0..=j {
            let s = stirling2(j as usize, k as usize);
            if !s.is_zero() {
                out.add_term(k, mono.clone(), c * BigInt::from(s));
            }
        }
    }
    out
}

/// Evaluates a symbolic moment at concrete parameters. See [`Poly::evaluate`].
pub fn evaluate<B: Basis>(
    poly: &Poly<B>,
    params: &MultinomialParams,
    coords: &[usize],
) -> Result<Rational> {
    poly.evaluate(params, coords)
}

/// Integer partitions of `n` as non-increasing sequences, in descending
/// lexicographic order: `(n), (n-1,1), ...`.
pub fn partitions(n: u32) -> Vec<Pattern> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Pattern>) {
        if remaining == 0 {
            out.push(Pattern(prefix.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Every pattern of total order `1..=max_order` with its formula, ordered by
/// total order and then descending lexicographic pattern.
pub fn catalog(max_order: u32, central: bool) -> Vec<(Pattern, MomentPoly)> {
    (1..=max_order)
        .flat_map(partitions)
        .map(|pattern| {
            let poly = if central {
                symbolic_central(&pattern)
            } else {
                symbolic_noncentral(&pattern)
            };
            (pattern, poly)
        })
        .collect()
}

impl<B: Basis> Poly<B> {
    /// True when every coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }
}
