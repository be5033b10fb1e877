//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`: always reduced, with a
//! positive denominator, so `==` is structural equality. Its `Display`
//! impl prints `a/b`, or just `a` for integers, which is the canonical
//! text form used everywhere in this crate.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn from_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// Parses `"a/b"` or `"a"` (optionally signed). Zero denominators are rejected.
pub fn parse(input: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: input.to_string(),
    };
    let s = input.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = n.parse().map_err(|_| err())?;
    let denom: BigInt = d.parse().map_err(|_| err())?;
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

/// Decimal rendering rounded half away from zero to `digits` places.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = value * Rational::from_integer(scale.clone());
    let (q, r) = scaled.numer().abs().div_rem(scaled.denom());
    let rounded = if r * 2u32 >= *scaled.denom() { q + 1u32 } else { q };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !(int_part.is_zero() && frac_part.is_zero()) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}

/// Nearest `f64`; only for the sampler and for display.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // both parts overflow f64; scale down before dividing
        let shift = value.numer().bits().max(value.denom().bits()).saturating_sub(1000);
        let n = (value.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (value.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub(crate) fn pow(base: &Rational, exp: u32) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    num_traits::pow(base.clone(), exp as usize)
}

pub(crate) fn is_unit_interval(value: &Rational) -> bool {
    value.numer().sign() != Sign::Minus && value <= &Rational::one()
}
