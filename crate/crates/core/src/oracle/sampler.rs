//! Seeded Monte Carlo estimates.
//!
//! Draws use Xoshiro256++ seeded through `SeedableRng::seed_from_u64`
//! (SplitMix64 expansion of the 64-bit seed), so a `(params, seed)` pair
//! always reproduces the same stream. Each multinomial vector is drawn as a
//! chain of conditional binomials: coordinate `i` takes
//! `Binomial(remaining trials, x_i / remaining mass)`.

use rand::{Rng, SeedableRng};
use rand_distr::{Binomial, Distribution};
use rand_xoshiro::Xoshiro256PlusPlus;

use super::Mode;
use crate::rational::to_f64;
use crate::{numeric, Error, MultiIndex, MultinomialParams, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    /// Sample standard deviation over `sqrt(n_samples)`.
    pub standard_error: f64,
    pub n_samples: u64,
    pub seed: u64,
}

impl MonteCarloEstimate {
    /// `|mean - exact| <= k · SE`.
    pub fn within(&self, exact: f64, k: f64) -> bool {
        (self.mean - exact).abs() <= k * self.standard_error
    }
}

#[derive(Debug, Clone)]
pub struct MultinomialSampler {
    m: u64,
    conditional: Vec<f64>,
}

impl MultinomialSampler {
    pub fn new(params: &MultinomialParams) -> Self {
        let mut mass = Rational::from_integer(1.into());
        let conditional = params
            .x()
            .iter()
            .map(|xi| {
                let q = if mass == Rational::from_integer(0.into()) {
                    0.0
                } else {
                    to_f64(&(xi / &mass)).clamp(0.0, 1.0)
                };
                mass -= xi;
                q
            })
            .collect();
        MultinomialSampler {
            m: params.m(),
            conditional,
        }
    }

    /// One draw of `(ξ_1, ..., ξ_d)`, written into `out`.
    pub fn draw_into<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [u64]) {
        let mut remaining = self.m;
        for (slot, &q) in out.iter_mut().zip(&self.conditional) {
            let k = if remaining == 0 || q == 0.0 {
                0
            } else if q >= 1.0 {
                remaining
            } else {
                Binomial::new(remaining, q)
                    .expect("probability clamped to [0, 1]")
                    .sample(rng)
            };
            *slot = k;
            remaining -= k;
        }
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        let mut out = vec![0; self.conditional.len()];
        self.draw_into(rng, &mut out);
        out
    }
}

pub fn rng_from_seed(seed: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

/// Monte Carlo estimate of a moment from `n` independent draws. Central
/// moments are centred at the exact mean `m x_i`, not the sample mean.
pub fn sample_moment(
    params: &MultinomialParams,
    p: &MultiIndex,
    mode: Mode,
    n: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    params.check(p)?;
    if n < 2 {
        return Err(Error::InvalidSampleCount(n));
    }
    let centers: Vec<f64> = numeric::mean(params).iter().map(to_f64).collect();
    let sampler = MultinomialSampler::new(params);
    let mut rng = rng_from_seed(seed);
    let mut draw = vec![0u64; params.dim()];

    // Welford
    let mut mean = 0.0f64;
    let mut m2 = 0.0f64;
    for i in 1..=n {
        sampler.draw_into(&mut rng, &mut draw);
        let g: f64 = draw
            .iter()
            .zip(p.exponents())
            .zip(&centers)
            .map(|((&k, &e), &c)| {
                let k = k as f64;
                match mode {
                    Mode::Noncentral => k.powi(e as i32),
                    Mode::Central => (k - c).powi(e as i32),
                    Mode::Factorial => (0..e).map(|j| k - f64::from(j)).product(),
                }
            })
            .product();
        let delta = g - mean;
        mean += delta / i as f64;
        m2 += delta * (g - mean);
    }
    let variance = m2 / (n - 1) as f64;
    Ok(MonteCarloEstimate {
        mean,
        standard_error: (variance / n as f64).sqrt(),
        n_samples: n,
        seed,
    })
}
