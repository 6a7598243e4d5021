//! Truncated p-adic expansions with pessimistic precision tracking.
//!
//! A [`PadicApprox`] stands for `p^v * u` where the unit `u` is known modulo
//! `p^N`; equivalently the value is known modulo `p^(v+N)` (its absolute
//! precision). When `u = 0` the value is only known to be `0 mod p^v` and
//! `N = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::exact::{unit_split, PadicExact};
use super::modular::{digits_of, inv_mod, modulo, pow_big, vp_int};
use super::norm::NormExp;
use super::prime::Prime;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicApprox {
    prime: Prime,
    valuation: i64,
    /// Least nonnegative residue of the unit part modulo `p^precision`.
    unit: BigInt,
    precision: u32,
}

impl PadicApprox {
    /// A value known only to vanish modulo `p^abs_precision`.
    pub fn zero_to(prime: Prime, abs_precision: i64) -> Self {
        PadicApprox { prime, valuation: abs_precision, unit: BigInt::zero(), precision: 0 }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn abs_precision(&self) -> i64 {
        self.valuation + self.precision as i64
    }

    pub fn unit_residue(&self) -> &BigInt {
        &self.unit
    }

    pub fn is_indistinguishable_from_zero(&self) -> bool {
        self.unit.is_zero()
    }

    /// Canonical digits `d_0 .. d_{N-1}`, each in `[0, p)`.
    pub fn digits(&self) -> Vec<u64> {
        digits_of(self.unit.clone(), &self.p(), self.precision as usize)
    }

    pub fn norm(&self) -> Result<NormExp> {
        if self.is_indistinguishable_from_zero() {
            Err(Error::InsufficientPrecision)
        } else {
            Ok(NormExp::from_int(-self.valuation))
        }
    }

    fn p(&self) -> BigInt {
        BigInt::from(self.prime.get())
    }

    fn modulus(&self) -> BigInt {
        pow_big(&self.p(), self.precision as u64)
    }

    /// Build from `p^v * s` where `s` is known modulo `p^(abs - w)` and `w` is its base valuation.
    fn normalize(prime: Prime, w: i64, s: BigInt, abs: i64) -> Self {
        if abs <= w || s.is_zero() {
            return Self::zero_to(prime, abs);
        }
        let p = BigInt::from(prime.get());
        let k = vp_int(&s, &p) as i64;
        let v = w + k;
        if v >= abs {
            return Self::zero_to(prime, abs);
        }
        let n = (abs - v) as u32;
        let unit = modulo(&(s / pow_big(&p, k as u64)), &pow_big(&p, n as u64));
        PadicApprox { prime, valuation: v, unit, precision: n }
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch(self.prime.get(), other.prime.get()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let p = self.p();
        let w = self.valuation.min(other.valuation);
        let abs = self.abs_precision().min(other.abs_precision());
        if abs <= w {
            return Ok(Self::zero_to(self.prime, abs));
        }
        let shift = |x: &Self| &x.unit * pow_big(&p, (x.valuation - w) as u64);
        let m = pow_big(&p, (abs - w) as u64);
        let s = modulo(&(shift(self) + shift(other)), &m);
        Ok(Self::normalize(self.prime, w, s, abs))
    }

    pub fn neg(&self) -> Self {
        if self.unit.is_zero() {
            return self.clone();
        }
        PadicApprox { unit: self.modulus() - &self.unit, ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        let v = self.valuation + other.valuation;
        if self.unit.is_zero() || other.unit.is_zero() {
            return Ok(Self::zero_to(self.prime, v));
        }
        let n = self.precision.min(other.precision);
        let m = pow_big(&self.p(), n as u64);
        let unit = modulo(&(&self.unit * &other.unit), &m);
        Ok(PadicApprox { prime: self.prime, valuation: v, unit, precision: n })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        if other.unit.is_zero() {
            return Err(Error::InsufficientPrecision);
        }
        let v = self.valuation - other.valuation;
        if self.unit.is_zero() {
            return Ok(Self::zero_to(self.prime, v));
        }
        let n = self.precision.min(other.precision);
        let m = pow_big(&self.p(), n as u64);
        let inv = inv_mod(&other.unit, &m).expect("unit residues are invertible");
        let unit = modulo(&(&self.unit * inv), &m);
        Ok(PadicApprox { prime: self.prime, valuation: v, unit, precision: n })
    }

    /// Whether the exact value `x` is consistent with this approximation.
    pub fn agrees_with(&self, x: &PadicExact) -> bool {
        if x.prime() != self.prime {
            return false;
        }
        let abs = self.abs_precision();
        if x.is_zero() {
            return self.is_indistinguishable_from_zero();
        }
        let (v, n, m) = unit_split(x.value(), self.prime);
        if self.is_indistinguishable_from_zero() {
            return v >= abs;
        }
        if v != self.valuation {
            return false;
        }
        let md = self.modulus();
        let inv = inv_mod(&m, &md).expect("unit denominator");
        modulo(&(n * inv), &md) == self.unit
    }

    /// The integer `p^v * unit` (or its rational counterpart) as an exact value.
    pub fn to_exact(&self) -> PadicExact {
        use num_rational::BigRational;
        let p = self.p();
        let scale = if self.valuation >= 0 {
            BigRational::from_integer(pow_big(&p, self.valuation as u64))
        } else {
            BigRational::new(1.into(), pow_big(&p, (-self.valuation) as u64))
        };
        if self.unit.is_zero() {
            return PadicExact::zero(self.prime);
        }
        PadicExact::new(scale * BigRational::from_integer(self.unit.clone()), self.prime)
    }

    /// Keep at most `n` relative digits.
    pub fn truncate(&self, n: u32) -> Self {
        if n >= self.precision || self.unit.is_zero() {
            return self.clone();
        }
        let m = pow_big(&self.p(), n as u64);
        Self::normalize(self.prime, self.valuation, modulo(&self.unit, &m), self.valuation + n as i64)
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.digits().iter().map(|d| d.to_string()).collect();
        write!(f, "{}^{}*({}) + O({}^{})", self.prime, self.valuation, ds.join(","), self.prime, self.abs_precision())
    }
}

/// Valuation and the first `n` canonical digits of a nonzero rational.
pub fn digit_expand(x: &PadicExact, n: u32) -> Result<PadicApprox> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let prime = x.prime();
    let (v, num, den) = unit_split(x.value(), prime);
    let p = BigInt::from(prime.get());
    let m = pow_big(&p, n as u64);
    let inv = inv_mod(&den, &m).expect("denominator prime to p");
    Ok(PadicApprox { prime, valuation: v, unit: modulo(&(num * inv), &m), precision: n })
}

/// Like [`digit_expand`], but 0 maps to a value known to vanish modulo `p^n`.
pub fn approx_of(x: &PadicExact, n: u32) -> PadicApprox {
    if x.is_zero() {
        PadicApprox::zero_to(x.prime(), n as i64)
    } else {
        digit_expand(x, n).expect("nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn digit_examples() {
        let x = digit_expand(&PadicExact::from_ratio(1, 5, p(2)), 5).unwrap();
        assert_eq!((x.valuation(), x.digits()), (0, vec![1, 0, 1, 1, 0]));
        let one = digit_expand(&PadicExact::from_int(1, p(7)), 3).unwrap();
        assert_eq!((one.valuation(), one.digits()), (0, vec![1, 0, 0]));
        let y = digit_expand(&PadicExact::from_ratio(1, 10, p(2)), 4).unwrap();
        assert_eq!((y.valuation(), y.digits()), (-1, vec![1, 0, 1, 1]));
        assert_eq!(digit_expand(&PadicExact::zero(p(2)), 4), Err(Error::ZeroInput));
    }

    #[test]
    fn cancellation_reduces_precision() {
        let a = digit_expand(&PadicExact::from_int(1, p(2)), 8).unwrap();
        let b = digit_expand(&PadicExact::from_int(9, p(2)), 8).unwrap();
        let d = a.sub(&b).unwrap();
        // 1 - 9 = -8 = 2^3 * (-1); known mod 2^8
        assert_eq!(d.valuation(), 3);
        assert_eq!(d.precision(), 5);
        assert!(d.agrees_with(&PadicExact::from_int(-8, p(2))));
        let z = a.sub(&a).unwrap();
        assert!(z.is_indistinguishable_from_zero());
        assert_eq!(z.norm(), Err(Error::InsufficientPrecision));
        assert_eq!(z.abs_precision(), 8);
    }

    #[test]
    fn division_keeps_relative_precision() {
        let a = digit_expand(&PadicExact::from_int(3, p(5)), 6).unwrap();
        let b = digit_expand(&PadicExact::from_int(10, p(5)), 6).unwrap();
        let q = a.div(&b).unwrap();
        assert_eq!((q.valuation(), q.precision()), (-1, 6));
        assert!(q.agrees_with(&PadicExact::from_ratio(3, 10, p(5))));
    }
}
