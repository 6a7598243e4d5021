//! The mod-4 coefficient-sum criterion for ergodicity of a ratio of
//! polynomials on `1 + 2Z_2`, and the scaling conjugation that brings a map
//! on `S_{2^l}(0)` to the unit sphere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::map::Map31;
use crate::padic::modular::{inv_mod, modulo};
use crate::padic::{p_power, valuation_of, Prime};
use crate::poly::Poly;

/// Coefficient sums of `R = f/g` modulo 4: `a1`/`b1` over odd powers,
/// `a2`/`b2` over even powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mod4Profile {
    pub a1: u8,
    pub a2: u8,
    pub b1: u8,
    pub b2: u8,
    /// Which of the four residue patterns matched, if any.
    pub case: Option<u8>,
    /// The match was found with numerator and denominator swapped.
    pub interchanged: bool,
    pub ergodic: bool,
}

const CASES: [(u8, [u8; 4]); 4] = [(1, [1, 2, 0, 1]), (2, [3, 2, 0, 3]), (3, [1, 0, 2, 1]), (4, [3, 0, 2, 3])];

fn mod4(c: &BigRational) -> Result<u8> {
    let four = BigInt::from(4);
    let inv = inv_mod(c.denom(), &four).ok_or(Error::NotSelfMap)?;
    let r = modulo(&(c.numer() * inv), &four);
    Ok(r.to_u32_digits().1.first().copied().unwrap_or(0) as u8)
}

fn sums(coeffs: &[BigRational]) -> Result<(u8, u8)> {
    let (mut odd, mut even) = (0u8, 0u8);
    for (i, c) in coeffs.iter().enumerate() {
        let r = mod4(c)?;
        if i % 2 == 1 {
            odd = (odd + r) % 4;
        } else {
            even = (even + r) % 4;
        }
    }
    Ok((odd, even))
}

fn match_case(s: [u8; 4]) -> Option<u8> {
    CASES.iter().find(|(_, pat)| *pat == s).map(|(c, _)| *c)
}

/// Both polynomials must have 2-adic integer coefficients and send odd
/// integers to odd values, i.e. have odd coefficient sums.
pub fn mod4_profile(num: &[BigRational], den: &[BigRational]) -> Result<Mod4Profile> {
    let (a1, a2) = sums(num)?;
    let (b1, b2) = sums(den)?;
    if (a1 + a2) % 2 == 0 || (b1 + b2) % 2 == 0 {
        return Err(Error::NotSelfMap);
    }
    let (case, interchanged) = match match_case([a1, a2, b1, b2]) {
        Some(c) => (Some(c), false),
        None => match match_case([b1, b2, a1, a2]) {
            Some(c) => (Some(c), true),
            None => (None, false),
        },
    };
    Ok(Mod4Profile { a1, a2, b1, b2, case, interchanged, ergodic: case.is_some() })
}

/// `g^{-1} o f o g` for `g(t) = p^s t`:
/// `(p^{2s} t^3 + p^s a t^2 + b t) / (p^s a t + b)`.
pub fn scale_conjugate(m: &Map31, s: i64) -> (Poly, Poly) {
    let ps = p_power(m.prime(), s);
    let (a, b) = (m.a().value(), m.b().value());
    let num = Poly::new(vec![BigRational::zero(), b.clone(), &ps * a, &ps * &ps]);
    let den = Poly::new(vec![b.clone(), &ps * a]);
    (num, den)
}

/// Multiply numerator and denominator by the power of 2 that makes the
/// denominator's value at 1 a 2-adic unit.
pub fn clear_to_integral(num: &Poly, den: &Poly) -> Result<(Poly, Poly)> {
    let two = Prime::new(2).expect("2 is prime");
    let d1 = den.eval(&BigRational::from_integer(1.into()));
    let v = valuation_of(&d1, two).finite().ok_or(Error::NotSelfMap)?;
    let scale = p_power(two, -v);
    Ok((num.scale(&scale), den.scale(&scale)))
}

/// Conjugate by `2^s`, clear, and evaluate the criterion.
pub fn mod4_for_scaling(m: &Map31, s: i64) -> Result<(Poly, Poly, Mod4Profile)> {
    if m.prime().get() != 2 {
        return Err(Error::WrongPrimeOrCase);
    }
    let (num, den) = scale_conjugate(m, s);
    let (num, den) = clear_to_integral(&num, &den)?;
    let profile = mod4_profile(num.coeffs(), den.coeffs())?;
    Ok((num, den, profile))
}
