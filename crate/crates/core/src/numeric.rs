//! Exact moments for concrete parameters.
//!
//! Everything here is evaluated in exact rational arithmetic; there is no
//! floating-point path. `m = 0` is allowed and gives the point mass at the
//! origin.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, falling_factorial, stirling2};
use crate::rational::{from_int, pow};
use crate::{MultiIndex, MultinomialParams, Rational, Result};

fn falling_m(params: &MultinomialParams, k: u64) -> Rational {
    let m = BigUint::from(params.m());
    from_int(BigInt::from(falling_factorial(&m, k as usize)))
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `P(ξ = k)`; zero outside the support `Σ k_i <= m`.
pub fn pmf(params: &MultinomialParams, k: &MultiIndex) -> Result<Rational> {
    params.check(k)?;
    let total = k.order();
    if total > params.m() {
        return Ok(Rational::zero());
    }
    let rest = params.m() - total;
    let denom = k
        .exponents()
        .iter()
        .fold(factorial(rest), |acc, &ki| acc * factorial(u64::from(ki)));
    let coeff = Rational::new(
        BigInt::from(factorial(params.m())),
        BigInt::from(denom),
    );
    let weight = params
        .x()
        .iter()
        .zip(k.exponents())
        .fold(pow(&params.remainder(), rest as u32), |acc, (xi, &ki)| {
            acc * pow(xi, ki)
        });
    Ok(coeff * weight)
}

/// `E[Π ξ_i^(k_i)] = m^(Σk) Π x_i^{k_i}`.
pub fn factorial_moment(params: &MultinomialParams, k: &MultiIndex) -> Result<Rational> {
    params.check(k)?;
    Ok(factorial_moment_unchecked(params, k))
}

fn factorial_moment_unchecked(params: &MultinomialParams, k: &MultiIndex) -> Rational {
    let lead = falling_m(params, k.order());
    if lead.is_zero() {
        return lead;
    }
    params
        .x()
        .iter()
        .zip(k.exponents())
        .fold(lead, |acc, (xi, &ki)| acc * pow(xi, ki))
}

fn stirling_weight(p: &MultiIndex, k: &MultiIndex) -> BigUint {
    p.exponents()
        .iter()
        .zip(k.exponents())
        .map(|(&pi, &ki)| stirling2(pi as usize, ki as usize))
        .product()
}

/// `E[Π ξ_i^{p_i}] = Σ_{k <= p} m^(Σk) Π S2(p_i, k_i) x_i^{k_i}`.
pub fn noncentral_moment(params: &MultinomialParams, p: &MultiIndex) -> Result<Rational> {
    params.check(p)?;
    Ok(noncentral_unchecked(params, p))
}

fn noncentral_unchecked(params: &MultinomialParams, p: &MultiIndex) -> Rational {
    p.dominated()
        .filter_map(|k| {
            let weight = stirling_weight(p, &k);
            (!weight.is_zero()).then(|| {
                from_int(BigInt::from(weight)) * factorial_moment_unchecked(params, &k)
            })
        })
        .sum()
}

/// `E[Π (ξ_i - m x_i)^{p_i}]`, summed term by term as
///
/// ```text
/// Σ_{ℓ <= p} Σ_{k <= ℓ} m^(Σk) (-m)^{Σ(p-ℓ)} Π C(p_i, ℓ_i) S2(ℓ_i, k_i) x_i^{p_i - ℓ_i + k_i}
/// ```
pub fn central_moment(params: &MultinomialParams, p: &MultiIndex) -> Result<Rational> {
    params.check(p)?;
    let neg_m = -from_int(params.m());
    let mut total = Rational::zero();
    for l in p.dominated() {
        let binom: BigUint = p
            .exponents()
            .iter()
            .zip(l.exponents())
            .map(|(&pi, &li)| binomial(pi as usize, li as usize))
            .product();
        let shift = (p.order() - l.order()) as u32;
        let outer = from_int(BigInt::from(binom)) * pow(&neg_m, shift);
        for k in l.dominated() {
            let weight = stirling_weight(&l, &k);
            if weight.is_zero() {
                continue;
            }
            let lead = falling_m(params, k.order());
            if lead.is_zero() {
                continue;
            }
            let mono = params
                .x()
                .iter()
                .zip(p.exponents().iter().zip(l.exponents()).zip(k.exponents()))
                .fold(Rational::one(), |acc, (xi, ((&pi, &li), &ki))| {
                    acc * pow(xi, pi - li + ki)
                });
            total += &outer * from_int(BigInt::from(weight)) * lead * mono;
        }
    }
    Ok(total)
}

/// `E[ξ] = (m x_1, ..., m x_d)`.
pub fn mean(params: &MultinomialParams) -> Vec<Rational> {
    let m = from_int(params.m());
    params.x().iter().map(|xi| &m * xi).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::Error;

    fn params(m: u64, x: &[(i64, i64)]) -> MultinomialParams {
        MultinomialParams::new(m, x.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
    }

    fn idx(v: &[u32]) -> MultiIndex {
        MultiIndex::from(v.to_vec())
    }

    #[test]
    fn pmf_examples() {
        assert_eq!(pmf(&params(2, &[(1, 2)]), &idx(&[1])).unwrap(), ratio(1, 2));
        assert_eq!(
            pmf(&params(3, &[(1, 3), (1, 3)]), &idx(&[4, 0])).unwrap(),
            ratio(0, 1)
        );
        let p = params(3, &[(1, 4), (1, 4)]);
        let mut total = Rational::zero();
        for a in 0..=3 {
            for b in 0..=(3 - a) {
                total += pmf(&p, &idx(&[a, b])).unwrap();
            }
        }
        assert_eq!(total, Rational::one());
    }

    #[test]
    fn factorial_moment_examples() {
        let p = params(4, &[(1, 4), (1, 4)]);
        assert_eq!(factorial_moment(&p, &idx(&[1, 1])).unwrap(), ratio(3, 4));
        assert_eq!(factorial_moment(&p, &idx(&[0, 0])).unwrap(), ratio(1, 1));
        assert_eq!(factorial_moment(&p, &idx(&[3, 2])).unwrap(), ratio(0, 1));
    }

    #[test]
    fn noncentral_examples() {
        assert_eq!(
            noncentral_moment(&params(3, &[(1, 2)]), &idx(&[2])).unwrap(),
            ratio(3, 1)
        );
        assert_eq!(
            noncentral_moment(&params(3, &[(1, 4), (1, 4)]), &idx(&[0, 0])).unwrap(),
            ratio(1, 1)
        );
        let p = params(5, &[(1, 8), (1, 8), (1, 8), (1, 8)]);
        assert_eq!(
            noncentral_moment(&p, &idx(&[1, 1, 1, 1])).unwrap(),
            ratio(15, 512)
        );
    }

    #[test]
    fn central_examples() {
        assert_eq!(
            central_moment(&params(10, &[(1, 4)]), &idx(&[2])).unwrap(),
            ratio(15, 8)
        );
        for (m, x) in [(0, (1, 2)), (7, (2, 7)), (3, (0, 1)), (5, (1, 1))] {
            assert_eq!(
                central_moment(&params(m, &[x]), &idx(&[1])).unwrap(),
                Rational::zero()
            );
        }
        assert_eq!(
            central_moment(&params(5, &[(1, 3), (1, 3)]), &idx(&[1, 1])).unwrap(),
            ratio(-5, 9)
        );
    }

    #[test]
    fn mean_examples() {
        assert_eq!(
            mean(&params(6, &[(1, 2), (1, 3)])),
            vec![ratio(3, 1), ratio(2, 1)]
        );
        assert_eq!(
            mean(&params(0, &[(1, 2), (1, 3)])),
            vec![Rational::zero(), Rational::zero()]
        );
        assert_eq!(mean(&params(7, &[(2, 7)])), vec![ratio(2, 1)]);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let p = params(3, &[(1, 4), (1, 4)]);
        let err = Error::DimensionMismatch {
            expected: 2,
            found: 1,
        };
        assert_eq!(pmf(&p, &idx(&[1])), Err(err.clone()));
        assert_eq!(factorial_moment(&p, &idx(&[1])), Err(err.clone()));
        assert_eq!(noncentral_moment(&p, &idx(&[1])), Err(err.clone()));
        assert_eq!(central_moment(&p, &idx(&[1])), Err(err));
        assert!(central_moment(&p, &idx(&[1, 1, 1])).is_err());
    }

    #[test]
    fn zero_trials() {
        let p = params(0, &[(1, 3), (1, 3)]);
        assert_eq!(noncentral_moment(&p, &idx(&[0, 0])).unwrap(), Rational::one());
        assert_eq!(noncentral_moment(&p, &idx(&[2, 1])).unwrap(), Rational::zero());
        assert_eq!(central_moment(&p, &idx(&[3, 0])).unwrap(), Rational::zero());
        assert_eq!(central_moment(&p, &idx(&[0, 0])).unwrap(), Rational::one());
    }
}
