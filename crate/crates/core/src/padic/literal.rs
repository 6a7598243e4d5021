//! Rational literals: `-?digits(/digits)?`, no whitespace, positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn split(s: &str) -> Result<(&str, Option<&str>)> {
    let bad = || Error::Parse(s.to_string());
    let body = s.strip_prefix('-').unwrap_or(s);
    let (n, d) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(n) || d.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    Ok((n, d))
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let (n, d) = split(s)?;
    let mut num: BigInt = n.parse().map_err(|_| Error::Parse(s.to_string()))?;
    if s.starts_with('-') {
        num = -num;
    }
    let den: BigInt = match d {
        Some(d) => d.parse().map_err(|_| Error::Parse(s.to_string()))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(s.to_string()));
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn parse_i64_pair(s: &str) -> Result<(i64, i64)> {
    let (n, d) = split(s)?;
    let bad = || Error::Parse(s.to_string());
    let mut num: i64 = n.parse().map_err(|_| bad())?;
    if s.starts_with('-') {
        num = -num;
    }
    let den: i64 = match d {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => 1,
    };
    if den == 0 {
        return Err(bad());
    }
    Ok((num, den))
}

pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `serialize_with` helper writing a rational as its literal.
pub fn serialize_rational<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}
