//! Exact valuations and symbolic norms `p^e`.
//!
//! Norms of elements of Q_p have integral exponents. Radii of spheres in C_p
//! (for instance the pre-image ladder radii) may carry rational exponents,
//! so [`NormExp`] stores `e` as an exact rational.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `v_p(x)`, with `Infinite` for `x = 0`. Orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn norm_exp(self) -> NormExp {
        match self {
            Valuation::Finite(v) => NormExp::from_int(-v),
            Valuation::Infinite => NormExp::Zero,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// A norm `p^e`; `Zero` is the norm of 0 (exponent negative infinity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormExp {
    Zero,
    Exp(Rational64),
}

impl NormExp {
    pub const ONE: NormExp = NormExp::Exp(Rational64::new_raw(0, 1));

    pub fn from_int(e: i64) -> Self {
        NormExp::Exp(Rational64::from_integer(e))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        NormExp::Exp(Rational64::new(num, den))
    }

    pub fn exp(self) -> Option<Rational64> {
        match self {
            NormExp::Zero => None,
            NormExp::Exp(e) => Some(e),
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, NormExp::Zero)
    }

    /// The exponent as an integer, if the norm is a Q_p norm.
    pub fn integral_exp(self) -> Option<i64> {
        self.exp().filter(|e| e.is_integer()).map(|e| e.to_integer())
    }

    /// `r^k` for integral `k`; `k` must be positive when `self` is zero.
    pub fn pow(self, k: i64) -> NormExp {
        match self {
            NormExp::Zero => {
                assert!(k > 0, "0 raised to a non-positive power");
                NormExp::Zero
            }
            NormExp::Exp(e) => NormExp::Exp(e * k),
        }
    }

    /// The positive real `k`-th root.
    pub fn root(self, k: i64) -> NormExp {
        assert!(k > 0);
        match self {
            NormExp::Zero => NormExp::Zero,
            NormExp::Exp(e) => NormExp::Exp(e / k),
        }
    }

    /// Divide by `p^k`.
    pub fn shrink(self, k: i64) -> NormExp {
        self / NormExp::from_int(k)
    }

    /// Render as `p^e` for reports.
    pub fn display_with(self, p: u64) -> String {
        match self {
            NormExp::Zero => "0".to_string(),
            NormExp::Exp(e) => format!("{p}^{}", format_ratio(e)),
        }
    }

    /// Exponent as a rational literal, `-inf` for the zero norm.
    pub fn exp_literal(self) -> String {
        match self {
            NormExp::Zero => "-inf".to_string(),
            NormExp::Exp(e) => format_ratio(e),
        }
    }

    pub fn parse_exp(s: &str) -> Result<NormExp> {
        if s == "-inf" {
            return Ok(NormExp::Zero);
        }
        let (n, d) = crate::padic::literal::parse_i64_pair(s)?;
        Ok(NormExp::from_ratio(n, d))
    }

    /// The norm as a float, only for human-facing summaries.
    pub fn approx_value(self, p: u64) -> f64 {
        match self {
            NormExp::Zero => 0.0,
            NormExp::Exp(e) => (p as f64).powf(*e.numer() as f64 / *e.denom() as f64),
        }
    }
}

pub(crate) fn format_ratio(e: Rational64) -> String {
    if e.denom().is_one() {
        format!("{}", e.numer())
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

impl PartialOrd for NormExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormExp {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (NormExp::Zero, NormExp::Zero) => Ordering::Equal,
            (NormExp::Zero, _) => Ordering::Less,
            (_, NormExp::Zero) => Ordering::Greater,
            (NormExp::Exp(a), NormExp::Exp(b)) => a.cmp(b),
        }
    }
}

impl Mul for NormExp {
    type Output = NormExp;
    // norms multiply, exponents add
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: NormExp) -> NormExp {
        match (self, rhs) {
            (NormExp::Exp(a), NormExp::Exp(b)) => NormExp::Exp(a + b),
            _ => NormExp::Zero,
        }
    }
}

impl Div for NormExp {
    type Output = NormExp;
    /// Panics when dividing by the zero norm.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: NormExp) -> NormExp {
        match (self, rhs) {
            (_, NormExp::Zero) => panic!("division by the zero norm"),
            (NormExp::Zero, _) => NormExp::Zero,
            (NormExp::Exp(a), NormExp::Exp(b)) => NormExp::Exp(a - b),
        }
    }
}

/// Serialized as its exponent literal, `-inf` for the zero norm.
impl serde::Serialize for NormExp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.exp_literal())
    }
}

impl fmt::Display for NormExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormExp::Zero => write!(f, "0"),
            NormExp::Exp(e) if e.is_zero() => write!(f, "1"),
            NormExp::Exp(e) if e.is_negative() => write!(f, "p^({})", format_ratio(*e)),
            NormExp::Exp(e) => write!(f, "p^{}", format_ratio(*e)),
        }
    }
}

pub(crate) fn require_integral(r: NormExp) -> Result<i64> {
    r.integral_exp().ok_or(Error::NonIntegralRadius)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_norm_orders_below_everything() {
        assert!(NormExp::Zero < NormExp::from_int(-1000));
        assert!(NormExp::from_ratio(1, 3) < NormExp::from_int(1));
        assert_eq!(NormExp::Zero.max(NormExp::ONE), NormExp::ONE);
    }

    #[test]
    fn exponent_algebra() {
        let r = NormExp::from_int(2);
        let beta = NormExp::from_int(1);
        // r^2 / beta with r = 4, beta = 2 over p = 2 is 8
        assert_eq!(r.pow(2) / beta, NormExp::from_int(3));
        assert_eq!(NormExp::from_int(1).root(3), NormExp::from_ratio(1, 3));
        assert_eq!(NormExp::Zero * r, NormExp::Zero);
    }

    #[test]
    fn valuation_sentinel() {
        assert!(Valuation::Infinite > Valuation::Finite(i64::MAX));
        assert_eq!(Valuation::Infinite.norm_exp(), NormExp::Zero);
        assert_eq!(Valuation::Finite(2).norm_exp(), NormExp::from_int(-2));
    }

    #[test]
    fn literal_round_trip() {
        for s in ["0", "-3", "1/3", "-7/9", "-inf"] {
            assert_eq!(NormExp::parse_exp(s).unwrap().exp_literal(), s);
        }
    }
}
