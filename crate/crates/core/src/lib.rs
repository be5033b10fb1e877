//! Exact moments of the multinomial distribution.
//!
//! For `ξ ~ Multinomial(m, x)` over `d` free coordinates (the last category
//! `x_{d+1} = 1 - Σ x_i` is implicit) this crate computes
//!
//! - factorial moments `E[Π ξ_i^(k_i)] = m^(Σk) Π x_i^{k_i}`,
//! - non-central moments `E[Π ξ_i^{p_i}]`, by re-expanding powers in the
//!   falling-factorial basis with Stirling numbers of the second kind,
//! - central moments `E[Π (ξ_i - m x_i)^{p_i}]`, via the binomial expansion
//!   of each centred factor,
//!
//! either as exact rationals for concrete parameters ([`numeric`]) or as
//! closed-form polynomials in `m` and the probabilities ([`symbolic`]).
//! The [`oracle`] module re-derives every value from the probability mass
//! function by brute-force enumeration of the support, and offers a seeded
//! Monte Carlo sampler for larger instances.
//!
//! ```
//! use multinomial_moments::{numeric, MultiIndex, MultinomialParams, Rational};
//!
//! let params = MultinomialParams::new(10, vec![Rational::new(1.into(), 4.into())]).unwrap();
//! let var = numeric::central_moment(&params, &MultiIndex::from(vec![2])).unwrap();
//! assert_eq!(var, Rational::new(15.into(), 8.into()));
//! ```

pub mod cli;
pub mod combinatorics;
pub mod errata;
mod error;
pub mod numeric;
pub mod oracle;
mod params;
pub mod rational;
pub mod symbolic;

pub use error::{Error, Result};
pub use params::{MultiIndex, MultinomialParams};
pub use rational::Rational;
