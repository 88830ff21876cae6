//! Exact rational scalars.
//!
//! Coefficients everywhere in the crate are `BigRational`; this module only
//! adds the canonical `"num/den"` text form used in reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ArithError;

pub type Rational = BigRational;

/// Shorthand for `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Canonical `"num/den"` rendering. The denominator is always printed, so
/// integers come out as `"7/1"`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"a/b"` or a bare integer `"a"`. The result is reduced to lowest
/// terms with a positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let bad = || ArithError::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Returns the integer value of `r`, or an error naming `what` when `r` has a
/// non-trivial denominator or does not fit in an `i64`.
pub fn to_i64(r: &Rational, what: &str) -> Result<i64, ArithError> {
    if !r.denom().is_one() {
        return Err(ArithError::NonIntegral(format!("{what} = {}", format_rational(r))));
    }
    i64::try_from(r.numer()).map_err(|_| ArithError::NonIntegral(format!("{what} out of range")))
}

/// Serde adapter storing a [`Rational`] as its `"num/den"` string.
pub mod serde_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
