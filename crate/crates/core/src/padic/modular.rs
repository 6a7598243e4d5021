use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exponent of `p` in a nonzero integer.
pub(crate) fn vp_int(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// Strip every factor `p` from a nonzero integer, returning `(k, n / p^k)`.
pub(crate) fn strip(n: &BigInt, p: &BigInt) -> (u64, BigInt) {
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// Least nonnegative residue.
pub(crate) fn modulo(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

pub(crate) fn inv_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

pub(crate) fn pow_big(p: &BigInt, k: u64) -> BigInt {
    num_traits::pow(p.clone(), k as usize)
}

/// Base-p digits of a nonnegative integer, least significant first, padded to `n`.
pub(crate) fn digits_of(mut x: BigInt, p: &BigInt, n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let (q, r) = x.div_rem(p);
        let d = match r.to_u64_digits() {
            (Sign::NoSign, _) => 0,
            (_, ds) => ds[0],
        };
        out.push(d);
        x = q;
    }
    out
}
