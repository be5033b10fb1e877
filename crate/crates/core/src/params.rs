use std::fmt;

use num_traits::{One, Signed};

use crate::{rational, Error, Rational, Result};

/// `Multinomial(m, x)` over `d = x.len()` free coordinates. The last
/// category's probability `1 - Σ x_i` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultinomialParams {
    m: u64,
    x: Vec<Rational>,
}

impl MultinomialParams {
    /// Validates `d >= 1`, every `x_i` in `[0, 1]` and `Σ x_i <= 1`.
    pub fn new(m: u64, x: Vec<Rational>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::EmptyProbabilities);
        }
        for (i, xi) in x.iter().enumerate() {
            if !rational::is_unit_interval(xi) {
                return Err(Error::ProbabilityOutOfRange {
                    index: i + 1,
                    value: xi.to_string(),
                });
            }
        }
        let sum: Rational = x.iter().sum();
        if sum > Rational::one() {
            return Err(Error::SimplexViolation {
                sum: sum.to_string(),
            });
        }
        Ok(MultinomialParams { m, x })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    /// Probability of the implicit last category.
    pub fn remainder(&self) -> Rational {
        let rest = Rational::one() - self.x.iter().sum::<Rational>();
        debug_assert!(!rest.is_negative());
        rest
    }

    pub(crate) fn check(&self, index: &MultiIndex) -> Result<()> {
        if index.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: index.len(),
            });
        }
        Ok(())
    }
}

/// Exponent vector `(p_1, ..., p_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zeros(d: usize) -> Self {
        MultiIndex(vec![0; d])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total order `Σ p_i`.
    pub fn order(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Every multi-index `k` with `0 <= k_i <= p_i`, in lexicographic order.
    pub fn dominated(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        let total: usize = self.0.iter().map(|&p| p as usize + 1).product();
        (0..total).map(move |mut code| {
            let mut k = vec![0u32; self.0.len()];
            for (slot, &p) in k.iter_mut().zip(&self.0).rev() {
                let base = p as usize + 1;
                *slot = (code % base) as u32;
                code /= base;
            }
            MultiIndex(k)
        })
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
