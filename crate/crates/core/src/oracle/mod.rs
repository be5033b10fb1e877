//! Independent checks of the moment formulas.
//!
//! [`oracle_moment`] computes an expectation straight from the probability
//! mass function by walking the whole support; [`sample_moment`] estimates
//! it by simulation when the support is too large. [`verify_sweep`] runs the
//! exact check over a grid of small instances.

mod sampler;
mod support;
mod sweep;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, falling_factorial};
use crate::numeric::{self, pmf};
use crate::rational::{from_int, pow};
use crate::{Error, MultiIndex, MultinomialParams, Rational, Result};

pub use sampler::{sample_moment, MonteCarloEstimate, MultinomialSampler};
pub use support::SupportIterator;
pub use sweep::{verify_sweep, OracleReport, ProbabilityGrid};

/// Largest support the exact oracle will enumerate.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Which expectation to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// `E[Π ξ_i^{p_i}]`
    Noncentral,
    /// `E[Π (ξ_i - m x_i)^{p_i}]`
    Central,
    /// `E[Π ξ_i^(p_i)]`
    Factorial,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Noncentral, Mode::Central, Mode::Factorial];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Noncentral => "noncentral",
            Mode::Central => "central",
            Mode::Factorial => "factorial",
        }
    }

    /// The closed-form value for this mode.
    pub fn formula(self, params: &MultinomialParams, p: &MultiIndex) -> Result<Rational> {
        match self {
            Mode::Noncentral => numeric::noncentral_moment(params, p),
            Mode::Central => numeric::central_moment(params, p),
            Mode::Factorial => numeric::factorial_moment(params, p),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "noncentral" => Ok(Mode::Noncentral),
            "central" => Ok(Mode::Central),
            "factorial" => Ok(Mode::Factorial),
            _ => Err(Error::Parse {
                what: "mode",
                input: s.to_string(),
            }),
        }
    }
}

/// Number of lattice points `k ∈ ℕ₀^d` with `Σ k_i <= m`.
pub fn support_size(m: u64, d: usize) -> BigUint {
    binomial(m as usize + d, d)
}

fn check_size(m: u64, d: usize) -> Result<()> {
    let size = support_size(m, d);
    if size > BigUint::from(ENUMERATION_LIMIT) {
        return Err(Error::EnumerationTooLarge {
            points: size.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// The support of one distribution, with each point's exact probability.
#[derive(Debug, Clone)]
pub struct Enumeration {
    params: MultinomialParams,
    points: Vec<(MultiIndex, Rational)>,
}

impl Enumeration {
    pub fn new(params: &MultinomialParams) -> Result<Self> {
        check_size(params.m(), params.dim())?;
        let points = SupportIterator::new(params.m(), params.dim())
            .map(|k| {
                let w = pmf(params, &k).expect("support points match the dimension");
                (k, w)
            })
            .collect();
        Ok(Enumeration {
            params: params.clone(),
            points,
        })
    }

    pub fn points(&self) -> &[(MultiIndex, Rational)] {
        &self.points
    }

    pub fn total_mass(&self) -> Rational {
        self.points.iter().map(|(_, w)| w).sum()
    }

    /// `Σ_k g(k) P(ξ = k)` with `g` chosen by `mode`.
    pub fn moment(&self, p: &MultiIndex, mode: Mode) -> Result<Rational> {
        self.params.check(p)?;
        let centers = numeric::mean(&self.params);
        let mut total = Rational::zero();
        for (k, w) in &self.points {
            if w.is_zero() {
                continue;
            }
            let g = k
                .exponents()
                .iter()
                .zip(p.exponents())
                .zip(&centers)
                .fold(Rational::one(), |acc, ((&ki, &pi), center)| {
                    let factor = match mode {
                        Mode::Noncentral => pow(&from_int(ki), pi),
                        Mode::Central => pow(&(from_int(ki) - center), pi),
                        Mode::Factorial => from_int(falling_factorial(&BigUint::from(ki), pi as usize)),
                    };
                    acc * factor
                });
            if !g.is_zero() {
                total += g * w;
            }
        }
        Ok(total)
    }
}

/// Exact expectation by enumerating the support against the pmf. Refuses
/// supports larger than [`ENUMERATION_LIMIT`].
pub fn oracle_moment(params: &MultinomialParams, p: &MultiIndex, mode: Mode) -> Result<Rational> {
    params.check(p)?;
    Enumeration::new(params)?.moment(p, mode)
}
