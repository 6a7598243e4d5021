//! Period-2 orbits: the sextic whose roots are the 2-periodic points, the
//! cubic curve of parameters with `b` itself 2-periodic, its rational
//! parametrization, and exact certificates.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::ergodic::invariant_radius_set;
use crate::error::{Error, Result};
use crate::map::Map31;
use crate::padic::{has_sqrt_qp, NormExp, PadicExact, Prime};
use crate::poly::Poly;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `P = M^3 + a x M D + b D^2` with `M = x^2 + a x + b`, `D = a x + b`.
/// `f(f(x)) - x` has numerator `x^3 P(x)`.
pub fn sextic_poly(a: &BigRational, b: &BigRational) -> Poly {
    let m = Poly::new(vec![b.clone(), a.clone(), int(1)]);
    let d = Poly::new(vec![b.clone(), a.clone()]);
    let axmd = &(&Poly::new(vec![int(0), a.clone()]) * &m) * &d;
    &(&m.pow(3) + &axmd) + &(&d * &d).scale(b)
}

/// The same sextic written out coefficient by coefficient.
pub fn sextic_expanded(a: &BigRational, b: &BigRational) -> Poly {
    let (a2, b2) = (a * a, b * b);
    Poly::new(vec![
        int(2) * &b2 * b,
        int(6) * a * &b2,
        int(3) * &b2 + int(6) * &a2 * b,
        int(7) * a * b + int(2) * &a2 * a,
        int(3) * b + int(4) * &a2,
        int(3) * a,
        int(1),
    ])
}

pub fn sextic_p(a: &PadicExact, b: &PadicExact, x: &PadicExact) -> PadicExact {
    x.map_value(|xv| sextic_poly(a.value(), b.value()).eval(xv))
}

/// `b^3 + (3a+3) b^2 + (4a^2+7a+3) b + (2a^3+6a^2+6a+2)`; for `b != 0` it
/// vanishes exactly when `P(b) = 0`, since `P(b) = b^3` times this cubic.
pub fn period_two_cubic(a: &PadicExact, b: &PadicExact) -> PadicExact {
    let (av, bv) = (a.value(), b.value());
    let a2 = av * av;
    let val = bv * bv * bv
        + (int(3) * av + int(3)) * bv * bv
        + (int(4) * &a2 + int(7) * av + int(3)) * bv
        + (int(2) * &a2 * av + int(6) * &a2 + int(6) * av + int(2));
    PadicExact::new(val, b.prime())
}

/// Rational points `(b, a) = (h(q), q h(q) - 1)` of the cubic curve, with
/// `h(q) = q / (1 + 3q + 4q^2 + 2q^3)`.
pub fn h_param(q: &BigRational) -> Result<(BigRational, BigRational)> {
    let half = BigRational::new((-1).into(), 2.into());
    if q.is_zero() || *q == int(-1) || *q == half {
        return Err(Error::ExcludedQ);
    }
    let den = int(1) + int(3) * q + int(4) * q * q + int(2) * q * q * q;
    let b = q / den;
    let a = q * &b - int(1);
    Ok((b, a))
}

/// A 2-periodic orbit `{b, f(b)}` with every property recorded separately,
/// so a failed check shows up as data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicOrbitCert {
    #[serde(serialize_with = "crate::padic::literal::serialize_rational")]
    pub q: BigRational,
    pub a: PadicExact,
    pub b: PadicExact,
    /// `(b, f(b))`, absent when `b` or `f(b)` is the pole.
    pub orbit: Option<(PadicExact, PadicExact)>,
    pub norms: Option<(NormExp, NormExp)>,
    /// `|b|` is an invariant radius.
    pub r_in_a: bool,
    /// `a^2 - 4b` has a square root in Q_p.
    pub sqrt_disc_exists: bool,
    /// `f(f(b)) = b` exactly.
    pub verified: bool,
    /// `|(f o f)'(b)| = |f'(b)| |f'(f(b))|`.
    pub multiplier_norm: Option<NormExp>,
    pub failure: Option<String>,
}

impl PeriodicOrbitCert {
    /// Periodic, on an invariant sphere, and with roots of `x^2 + a x + b` in Q_p.
    pub fn meets_checklist(&self) -> bool {
        self.verified && self.r_in_a && self.sqrt_disc_exists
    }
}

pub fn build_2periodic(q: &BigRational, p: Prime) -> Result<PeriodicOrbitCert> {
    let (b, a) = h_param(q)?;
    let (a, b) = (PadicExact::new(a, p), PadicExact::new(b, p));
    let m = Map31::new(p, a.clone(), b.clone())?;
    let mut cert = PeriodicOrbitCert {
        q: q.clone(),
        r_in_a: invariant_radius_set(&m).contains(b.norm()),
        sqrt_disc_exists: has_sqrt_qp(m.disc()).is_ok(),
        a,
        b: b.clone(),
        orbit: None,
        norms: None,
        verified: false,
        multiplier_norm: None,
        failure: None,
    };
    let fb = match m.eval(&b) {
        Ok(v) => v,
        Err(e) => {
            cert.failure = Some(format!("f(b): {e}"));
            return Ok(cert);
        }
    };
    cert.norms = Some((b.norm(), fb.norm()));
    match m.eval(&fb) {
        Ok(ffb) => cert.verified = ffb == b,
        Err(e) => cert.failure = Some(format!("f(f(b)): {e}")),
    }
    if let (Ok(d1), Ok(d2)) = (m.f_prime_norm(&b), m.f_prime_norm(&fb)) {
        cert.multiplier_norm = Some(d1 * d2);
    }
    cert.orbit = Some((b, fb));
    Ok(cert)
}

/// Certificates for `q = n/d` with `1 <= |n| <= max_num`, `1 <= d <= max_den`
/// in lowest terms, skipping excluded values.
pub fn scan_q_grid(max_num: i64, max_den: i64, p: Prime) -> Vec<PeriodicOrbitCert> {
    let mut qs = Vec::new();
    for d in 1..=max_den {
        for n in 1..=max_num {
            for s in [1, -1] {
                let q = BigRational::new((s * n).into(), d.into());
                if q.denom() == &num_bigint::BigInt::from(d) && !qs.contains(&q) {
                    qs.push(q);
                }
            }
        }
    }
    qs.sort();
    qs.iter().filter_map(|q| build_2periodic(q, p).ok()).collect()
}

/// `|f(x) - t2| = |x - t1|` for a 2-cycle `t1 <-> t2`.
pub fn orbit_sphere_swap_check(m: &Map31, t1: &PadicExact, t2: &PadicExact, x: &PadicExact) -> Result<bool> {
    if &m.eval(t1)? != t2 || &m.eval(t2)? != t1 {
        return Err(Error::NotPeriodicPair);
    }
    Ok(m.eval(x)?.distance(t2) == x.distance(t1))
}

/// `|b| in A` implies `|a| != 1`.
pub fn b_radius_implies_a_not_unit(m: &Map31) -> bool {
    !invariant_radius_set(m).contains(m.b().norm()) || m.delta() != NormExp::ONE
}

/// A root-norm claim made about a specific map, checked against the
/// Newton-polygon values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootNormClaim {
    pub p: u64,
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub alpha_exp: i64,
    pub beta_exp: i64,
}

/// Published values for the `q = 1` two-cycle map that do not survive
/// recomputation.
pub const KNOWN_CLAIMS: &[RootNormClaim] =
    &[RootNormClaim { p: 2, a: (-9, 10), b: (1, 10), alpha_exp: 3, beta_exp: 3 }];

/// Warnings for every known claim about `m` that disagrees with its actual
/// root norms.
pub fn claim_warnings(m: &Map31) -> Vec<String> {
    let p = m.prime();
    KNOWN_CLAIMS
        .iter()
        .filter(|c| {
            c.p == p.get()
                && m.a().value() == &BigRational::new(c.a.0.into(), c.a.1.into())
                && m.b().value() == &BigRational::new(c.b.0.into(), c.b.1.into())
        })
        .filter(|c| NormExp::from_int(c.alpha_exp) != m.alpha() || NormExp::from_int(c.beta_exp) != m.beta())
        .map(|c| {
            let in_a = invariant_radius_set(m).contains(m.b().norm());
            format!(
                "stated root norms alpha = {p}^{}, beta = {p}^{} are inconsistent: alpha*beta must equal |b| = {}; \
                 recomputed alpha = {}, beta = {}, so |b| is {}an invariant radius",
                c.alpha_exp,
                c.beta_exp,
                m.b().norm().display_with(p.get()),
                m.alpha().display_with(p.get()),
                m.beta().display_with(p.get()),
                if in_a { "" } else { "not " },
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sextic_forms_agree() {
        for (a, b) in [(q(-9, 10), q(1, 10)), (q(3, 7), q(-5, 2)), (q(1, 1), q(1, 1))] {
            assert_eq!(sextic_poly(&a, &b), sextic_expanded(&a, &b));
            assert_eq!(sextic_poly(&a, &b).coeff(0), int(2) * &b * &b * &b);
        }
    }

    #[test]
    fn two_cycle_parameters() {
        let p = Prime::new(2).unwrap();
        let (a, b) = (PadicExact::from_ratio(-9, 10, p), PadicExact::from_ratio(1, 10, p));
        assert!(sextic_p(&a, &b, &b).is_zero());
        assert!(period_two_cubic(&a, &b).is_zero());
        assert!(period_two_cubic(&PadicExact::from_int(-1, p), &PadicExact::zero(p)).is_zero());
    }

    #[test]
    fn parametrization() {
        assert_eq!(h_param(&q(1, 1)).unwrap(), (q(1, 10), q(-9, 10)));
        assert_eq!(h_param(&q(2, 1)).unwrap(), (q(2, 39), q(-35, 39)));
        for bad in [q(0, 1), q(-1, 1), q(-1, 2)] {
            assert_eq!(h_param(&bad), Err(Error::ExcludedQ));
        }
    }

    #[test]
    fn example_certificate() {
        let cert = build_2periodic(&q(1, 1), Prime::new(2).unwrap()).unwrap();
        assert!(cert.verified);
        let (t1, t2) = cert.orbit.clone().unwrap();
        assert_eq!((t1.literal(), t2.literal()), ("1/10".into(), "1/5".into()));
        assert_eq!(cert.norms, Some((NormExp::from_int(1), NormExp::ONE)));
        assert!(cert.sqrt_disc_exists && !cert.r_in_a);
        let c3 = build_2periodic(&q(1, 1), Prime::new(3).unwrap()).unwrap();
        assert!(c3.verified);
        assert_eq!(c3.norms.unwrap().0, NormExp::ONE);
    }

    #[test]
    fn swap_and_prop5() {
        let m = Map31::parse(2, "-9/10", "1/10").unwrap();
        let p = m.prime();
        let (t1, t2) = (PadicExact::from_ratio(1, 10, p), PadicExact::from_ratio(1, 5, p));
        assert!(orbit_sphere_swap_check(&m, &t1, &t2, &t1).unwrap());
        let x = PadicExact::new(t1.value() + int(2), p);
        assert!(orbit_sphere_swap_check(&m, &t1, &t2, &x).unwrap());
        assert_eq!(orbit_sphere_swap_check(&m, &t1, &t1, &x), Err(Error::NotPeriodicPair));
        assert!(b_radius_implies_a_not_unit(&m));
    }

    #[test]
    fn claim_warning_fires_only_for_the_claimed_map() {
        let m = Map31::parse(2, "-9/10", "1/10").unwrap();
        let w = claim_warnings(&m);
        assert_eq!(w.len(), 1);
        assert!(w[0].contains("recomputed alpha = 2^0, beta = 2^1"));
        assert!(claim_warnings(&Map31::parse(2, "5/2", "1").unwrap()).is_empty());
    }
}
