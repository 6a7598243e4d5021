//! Independent reference implementations used as oracles by the integration
//! and acceptance tests. Nothing here calls into the library's arithmetic.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn qi(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Remove every factor `p` from `n`, dividing by `p^(2^j)` from the
/// largest power down so huge valuations stay cheap.
fn strip(n: &BigInt, p: u64) -> (i64, BigInt) {
    let mut n = n.clone();
    if n.is_zero() {
        return (0, n);
    }
    let mut powers = vec![(BigInt::from(p), 1i64)];
    while powers.last().unwrap().0.bits() * 2 <= n.bits() + 1 {
        let (q, e) = powers.last().unwrap();
        powers.push((q * q, e * 2));
    }
    let mut k = 0;
    for (q, e) in powers.iter().rev() {
        while (&n % q).is_zero() {
            n /= q;
            k += e;
        }
    }
    (k, n)
}

/// `v_p(x)` by repeated division; `None` for zero.
pub fn vp(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(strip(x.numer(), p).0 - strip(x.denom(), p).0)
}

/// Exponent `e` with `|x|_p = p^e`.
pub fn norm_exp(x: &BigRational, p: u64) -> Option<i64> {
    vp(x, p).map(|v| -v)
}

/// `(x^3 + a x^2 + b x) / (a x + b)`, straight from the definition.
pub fn f(a: &BigRational, b: &BigRational, x: &BigRational) -> Option<BigRational> {
    let den = a * x + b;
    if den.is_zero() {
        return None;
    }
    Some((x * x * x + a * x * x + b * x) / den)
}

/// Quotient rule on the same formula.
pub fn f_prime(a: &BigRational, b: &BigRational, x: &BigRational) -> Option<BigRational> {
    let den = a * x + b;
    if den.is_zero() {
        return None;
    }
    let num = x * x * x + a * x * x + b * x;
    let dnum = qi(3) * x * x + qi(2) * a * x + b;
    Some((dnum * &den - a * num) / (&den * &den))
}

/// Canonical digits `d_0, d_1, ...` of the unit part of `x`.
pub fn unit_digits(x: &BigRational, p: u64, n: usize) -> Vec<u64> {
    let (_, mut u) = strip(x.numer(), p);
    let (_, w) = strip(x.denom(), p);
    let pb = BigInt::from(p);
    let w_inv = w.mod_floor(&pb).modpow(&BigInt::from(p - 2), &pb);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let d = (&u * &w_inv).mod_floor(&pb);
        out.push(d.to_u64().unwrap());
        u = (u - &d * &w) / &pb;
    }
    out
}

/// Random point of exact norm `p^e`: `p^{-e} u / w` with `p` dividing neither.
pub fn random_on_sphere<R: Rng>(rng: &mut R, p: u64, e: i64, bound: i64) -> BigRational {
    let unit = |rng: &mut R| loop {
        let n: i64 = rng.gen_range(1..=bound);
        if n % p as i64 != 0 {
            return n;
        }
    };
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let u = unit(rng) * sign;
    let w = unit(rng);
    q(u, w) * p_pow(p, -e)
}

pub fn p_pow(p: u64, k: i64) -> BigRational {
    let pk = BigRational::from_integer(BigInt::from(p).pow(k.unsigned_abs() as u32));
    if k >= 0 {
        pk
    } else {
        pk.recip()
    }
}

/// Dense polynomials, lowest degree first.
pub type P = Vec<BigRational>;

pub fn padd(x: &P, y: &P) -> P {
    let n = x.len().max(y.len());
    (0..n)
        .map(|i| x.get(i).cloned().unwrap_or_else(BigRational::zero) + y.get(i).cloned().unwrap_or_else(BigRational::zero))
        .collect()
}

pub fn pmul(x: &P, y: &P) -> P {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); x.len() + y.len() - 1];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            out[i + j] += xi * yj;
        }
    }
    out
}

pub fn pscale(x: &P, s: &BigRational) -> P {
    x.iter().map(|c| c * s).collect()
}

pub fn ptrim(mut x: P) -> P {
    while x.last().is_some_and(|c| c.is_zero()) {
        x.pop();
    }
    x
}

/// Numerator of `f(f(x)) - x` over the denominator `D^2 (a N + b D)`, with
/// `N = x^3 + a x^2 + b x` and `D = a x + b`.
pub fn second_iterate_numerator(a: &BigRational, b: &BigRational) -> P {
    let n: P = vec![qi(0), b.clone(), a.clone(), qi(1)];
    let d: P = vec![b.clone(), a.clone()];
    let n2 = pmul(&n, &n);
    let d2 = pmul(&d, &d);
    let top = padd(&padd(&pmul(&n2, &n), &pscale(&pmul(&n2, &d), a)), &pscale(&pmul(&n, &d2), b));
    let lin = padd(&pscale(&n, a), &pscale(&d, b));
    let x_d2_lin = pmul(&vec![qi(0), qi(1)], &pmul(&d2, &lin));
    ptrim(padd(&top, &pscale(&x_d2_lin, &qi(-1))))
}

/// `f(u/w)` as an unreduced fraction: exact, but skips the gcd so deep
/// iterates stay cheap.
pub fn f_unreduced(a: &BigRational, b: &BigRational, (u, w): (&BigInt, &BigInt)) -> (BigInt, BigInt) {
    let (an, ad, bn, bd) = (a.numer(), a.denom(), b.numer(), b.denom());
    let u2 = u * u;
    let w2 = w * w;
    let top = &u2 * u * ad * bd + an * bd * &u2 * w + bn * ad * u * &w2;
    let bottom = &w2 * (an * bd * u + bn * ad * w);
    (top, bottom)
}

/// `v_p(u/w)` for an unreduced fraction.
pub fn vp_frac(u: &BigInt, w: &BigInt, p: u64) -> Option<i64> {
    if u.is_zero() {
        return None;
    }
    let v = |n: &BigInt| -> i64 {
        if p == 2 {
            n.trailing_zeros().unwrap() as i64
        } else {
            strip(n, p).0
        }
    };
    Some(v(u) - v(w))
}
