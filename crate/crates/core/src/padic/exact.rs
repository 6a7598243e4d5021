use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::literal::{format_rational, parse_rational};
use super::modular::{strip, vp_int};
use super::norm::{NormExp, Valuation};
use super::prime::Prime;
use crate::error::{Error, Result};

/// An element of Q_p given by an exact rational.
///
/// `BigRational` keeps the fraction reduced with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicExact {
    value: BigRational,
    prime: Prime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl PadicExact {
    pub fn new(value: BigRational, prime: Prime) -> Self {
        PadicExact { value, prime }
    }

    pub fn from_int(n: i64, prime: Prime) -> Self {
        Self::new(BigRational::from_integer(n.into()), prime)
    }

    pub fn from_ratio(num: i64, den: i64, prime: Prime) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), prime)
    }

    pub fn zero(prime: Prime) -> Self {
        Self::new(BigRational::zero(), prime)
    }

    pub fn parse(literal: &str, prime: Prime) -> Result<Self> {
        Ok(Self::new(parse_rational(literal)?, prime))
    }

    #[inline]
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn valuation(&self) -> Valuation {
        valuation_of(&self.value, self.prime)
    }

    pub fn norm(&self) -> NormExp {
        self.valuation().norm_exp()
    }

    pub fn literal(&self) -> String {
        format_rational(&self.value)
    }

    /// `(v, n, m)` with `x = p^v n / m`, `p` dividing neither `n` nor `m`.
    pub fn unit_split(&self) -> Result<(i64, BigInt, BigInt)> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(unit_split(&self.value, self.prime))
    }

    pub fn arith(&self, other: &PadicExact, op: ArithOp) -> Result<PadicExact> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch(self.prime.get(), other.prime.get()));
        }
        let value = match op {
            ArithOp::Add => &self.value + &other.value,
            ArithOp::Sub => &self.value - &other.value,
            ArithOp::Mul => &self.value * &other.value,
            ArithOp::Div => {
                if other.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                &self.value / &other.value
            }
        };
        Ok(PadicExact::new(value, self.prime))
    }

    pub fn try_add(&self, o: &PadicExact) -> Result<PadicExact> {
        self.arith(o, ArithOp::Add)
    }
    pub fn try_sub(&self, o: &PadicExact) -> Result<PadicExact> {
        self.arith(o, ArithOp::Sub)
    }
    pub fn try_mul(&self, o: &PadicExact) -> Result<PadicExact> {
        self.arith(o, ArithOp::Mul)
    }
    pub fn try_div(&self, o: &PadicExact) -> Result<PadicExact> {
        self.arith(o, ArithOp::Div)
    }

    /// `|self - other|_p`.
    pub fn distance(&self, other: &PadicExact) -> NormExp {
        norm_of(&(&self.value - &other.value), self.prime)
    }

    /// Same value under a different prime.
    pub fn with_prime(&self, prime: Prime) -> PadicExact {
        PadicExact::new(self.value.clone(), prime)
    }

    pub fn map_value(&self, f: impl FnOnce(&BigRational) -> BigRational) -> PadicExact {
        PadicExact::new(f(&self.value), self.prime)
    }
}

/// Serialized as its rational literal.
impl serde::Serialize for PadicExact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.literal())
    }
}

impl fmt::Display for PadicExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

pub fn valuation_of(x: &BigRational, prime: Prime) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(prime.get());
    let vn = vp_int(x.numer(), &p) as i64;
    let vd = vp_int(x.denom(), &p) as i64;
    Valuation::Finite(vn - vd)
}

pub fn norm_of(x: &BigRational, prime: Prime) -> NormExp {
    valuation_of(x, prime).norm_exp()
}

/// Nonzero `x = p^v n / m` with `n`, `m` prime to `p`, `m > 0`.
pub(crate) fn unit_split(x: &BigRational, prime: Prime) -> (i64, BigInt, BigInt) {
    let p = BigInt::from(prime.get());
    let (vn, n) = strip(x.numer(), &p);
    let (vd, m) = strip(x.denom(), &p);
    (vn as i64 - vd as i64, n, m)
}

/// `p^k` as a rational, `k` of either sign.
pub fn p_power(prime: Prime, k: i64) -> BigRational {
    let pk = BigInt::from(prime.get()).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        BigRational::from_integer(pk)
    } else {
        BigRational::new(BigInt::from(1), pk)
    }
}

/// Max bit length of numerator and denominator.
pub fn height_bits(x: &BigRational) -> u64 {
    x.numer().abs().bits().max(x.denom().bits())
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn valuation_examples() {
        let x = PadicExact::from_ratio(1, 10, p(2));
        assert_eq!(x.valuation(), Valuation::Finite(-1));
        assert_eq!(x.norm(), NormExp::from_int(1));
        assert_eq!(PadicExact::zero(p(7)).valuation(), Valuation::Infinite);
        assert_eq!(PadicExact::zero(p(7)).norm(), NormExp::Zero);
        let y = PadicExact::from_int(18, p(3));
        assert_eq!(y.valuation(), Valuation::Finite(2));
        assert_eq!(y.norm(), NormExp::from_int(-2));
    }

    #[test]
    fn arithmetic_examples() {
        let x = PadicExact::from_ratio(1, 10, p(2));
        let s = x.try_add(&x).unwrap();
        assert_eq!(s, PadicExact::from_ratio(1, 5, p(2)));
        assert_eq!(s.norm(), NormExp::ONE);
        assert_eq!(x.try_add(&PadicExact::zero(p(2))).unwrap(), x);
        let prod = x.try_mul(&PadicExact::from_ratio(1, 5, p(2))).unwrap();
        assert_eq!(prod.norm(), NormExp::from_int(1));
    }

    #[test]
    fn arithmetic_errors() {
        let x = PadicExact::from_int(3, p(2));
        assert_eq!(x.try_div(&PadicExact::zero(p(2))), Err(Error::DivisionByZero));
        assert_eq!(x.try_add(&PadicExact::from_int(3, p(3))), Err(Error::PrimeMismatch(2, 3)));
    }

    #[test]
    fn unit_split_matches_definition() {
        let x = PadicExact::from_ratio(-72, 5, p(3));
        let (v, n, m) = x.unit_split().unwrap();
        assert_eq!((v, n, m), (2, BigInt::from(-8), BigInt::from(5)));
        assert_eq!(PadicExact::zero(p(3)).unit_split(), Err(Error::ZeroInput));
    }
}
