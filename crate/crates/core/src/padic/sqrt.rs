//! Square roots in Q_p by Hensel lifting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::approx::{digit_expand, PadicApprox};
use super::exact::{unit_split, PadicExact};
use super::modular::{inv_mod, modulo, pow_big};
use super::prime::sqrt_mod_prime;
use crate::error::{Error, NoRootReason, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareRoot {
    /// One of the two roots to `precision` digits. For odd `p` its leading digit
    /// is at most `(p-1)/2`; for `p = 2` its unit part is `1 mod 4`.
    pub approx: PadicApprox,
    /// The same root as an exact rational when `x` is a rational square.
    pub exact: Option<PadicExact>,
}

/// Decide whether a nonzero rational is a square in Q_p.
pub fn has_sqrt_qp(x: &PadicExact) -> Result<()> {
    let (v, n, m) = x.unit_split()?;
    if v % 2 != 0 {
        return Err(Error::NoRootInQp(NoRootReason::OddValuation));
    }
    let p = x.prime().get();
    if p == 2 {
        let eight = BigInt::from(8);
        let u = modulo(&(n * inv_mod(&m, &eight).expect("odd")), &eight);
        if u != BigInt::from(1) {
            return Err(Error::NoRootInQp(NoRootReason::NotOneModEight));
        }
    } else {
        let pb = BigInt::from(p);
        let u = modulo(&(n * inv_mod(&m, &pb).expect("unit")), &pb);
        let u = u.to_u64_digits().1.first().copied().unwrap_or(0);
        if sqrt_mod_prime(u, p).is_none() {
            return Err(Error::NoRootInQp(NoRootReason::NonResidue));
        }
    }
    Ok(())
}

pub fn sqrt_qp(x: &PadicExact, precision: u32) -> Result<SquareRoot> {
    has_sqrt_qp(x)?;
    let prime = x.prime();
    let p = prime.get();
    let pb = BigInt::from(p);
    let (v, n, m) = unit_split(x.value(), prime);
    let n_digits = precision.max(1);

    let root_unit = if p == 2 {
        // Work modulo 2^(N+1) so the root is right modulo 2^N.
        let k_top = n_digits as u64 + 1;
        let md = pow_big(&pb, k_top.max(3));
        let u = modulo(&(&n * inv_mod(&m, &md).expect("odd")), &md);
        let mut r = BigInt::from(1);
        for k in 3..k_top.max(3) {
            // invariant: r^2 = u mod 2^k
            let mk1 = pow_big(&pb, k + 1);
            if modulo(&(&r * &r - &u), &mk1) != BigInt::zero() {
                r += pow_big(&pb, k - 1);
            }
        }
        let out_mod = pow_big(&pb, n_digits as u64);
        let r = modulo(&r, &out_mod);
        let four = BigInt::from(4);
        if n_digits >= 2 && modulo(&r, &four) != BigInt::from(1) {
            modulo(&(-r), &out_mod)
        } else {
            r
        }
    } else {
        let md = pow_big(&pb, n_digits as u64);
        let u = modulo(&(&n * inv_mod(&m, &md).expect("unit")), &md);
        let u0 = modulo(&u, &pb).to_u64_digits().1.first().copied().unwrap_or(0);
        let r0 = sqrt_mod_prime(u0, p).expect("residue checked");
        let r0 = r0.min(p - r0);
        let mut r = BigInt::from(r0);
        let mut k = 1u64;
        while k < n_digits as u64 {
            k = (2 * k).min(n_digits as u64);
            let mk = pow_big(&pb, k);
            let two_r_inv = inv_mod(&(BigInt::from(2) * &r), &mk).expect("2r is a unit");
            r = modulo(&(&r - (&r * &r - &u) * two_r_inv), &mk);
        }
        r
    };

    let half = v / 2;
    let root_value = {
        let scale = if half >= 0 {
            BigRational::from_integer(pow_big(&pb, half as u64))
        } else {
            BigRational::new(1.into(), pow_big(&pb, (-half) as u64))
        };
        scale * BigRational::from_integer(root_unit)
    };
    let approx = digit_expand(&PadicExact::new(root_value, prime), n_digits)?;

    let exact = exact_rational_sqrt(x.value()).map(|s| {
        let pos = PadicExact::new(s.clone(), prime);
        if approx.agrees_with(&pos) {
            pos
        } else {
            PadicExact::new(-s, prime)
        }
    });
    Ok(SquareRoot { approx, exact })
}

/// Positive rational square root, if `x` is the square of a rational.
pub fn exact_rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(BigRational::zero());
    }
    let rn = x.numer().sqrt();
    let rd = x.denom().sqrt();
    if &(&rn * &rn) == x.numer() && &(&rd * &rd) == x.denom() {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}
