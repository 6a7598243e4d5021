//! The set of invariant radii and normalized Haar measure on a sphere.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::map::Map31;
use crate::padic::{p_power, require_integral, NormExp, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InvariantSetKind {
    /// `alpha = beta`: the radii `(0, alpha)`.
    EqualRoots,
    /// `alpha < beta`: the radii `(0, beta)` without `alpha`.
    DistinctRoots,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantRadiusSet {
    pub kind: InvariantSetKind,
    pub alpha: NormExp,
    pub beta: NormExp,
}

impl InvariantRadiusSet {
    pub fn of(m: &Map31) -> Self {
        let kind = if m.alpha() == m.beta() {
            InvariantSetKind::EqualRoots
        } else {
            InvariantSetKind::DistinctRoots
        };
        InvariantRadiusSet { kind, alpha: m.alpha(), beta: m.beta() }
    }

    pub fn contains(&self, r: NormExp) -> bool {
        if r.is_zero() || r == self.alpha {
            return false;
        }
        match self.kind {
            InvariantSetKind::EqualRoots => r < self.alpha,
            InvariantSetKind::DistinctRoots => r < self.beta,
        }
    }
}

/// Interval notation over radii, e.g. `(0, p^-1) u (p^-1, p^1)`.
impl fmt::Display for InvariantRadiusSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = format!("p^{}", self.alpha.exp_literal());
        match self.kind {
            InvariantSetKind::EqualRoots => write!(f, "(0, {a})"),
            InvariantSetKind::DistinctRoots => {
                write!(f, "(0, {a}) u ({a}, p^{})", self.beta.exp_literal())
            }
        }
    }
}

pub fn invariant_radius_set(m: &Map31) -> InvariantRadiusSet {
    InvariantRadiusSet::of(m)
}

/// `mu(V_rho(c)) = rho / (r (1 - 1/p))` for a ball inside `S_r(0)`.
pub fn haar_measure(ball_radius: NormExp, sphere_radius: NormExp, p: Prime) -> Result<BigRational> {
    let rho = require_integral(ball_radius)?;
    let r = require_integral(sphere_radius)?;
    if rho >= r {
        return Err(Error::BallNotInSphere);
    }
    let pu = BigInt::from(p.get());
    Ok(p_power(p, rho - r) * BigRational::new(pu.clone(), pu - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_roots_set() {
        let m = Map31::parse(2, "5/2", "1").unwrap();
        let a = invariant_radius_set(&m);
        assert_eq!(a.kind, InvariantSetKind::DistinctRoots);
        assert!(a.contains(NormExp::from_int(-2)));
        assert!(a.contains(NormExp::ONE));
        assert!(!a.contains(NormExp::from_int(-1)));
        assert!(!a.contains(NormExp::from_int(1)));
        assert_eq!(a.to_string(), "(0, p^-1) u (p^-1, p^1)");
    }

    #[test]
    fn equal_roots_set() {
        let m = Map31::parse(2, "2", "1").unwrap();
        let a = invariant_radius_set(&m);
        assert_eq!(a.kind, InvariantSetKind::EqualRoots);
        assert!(a.contains(NormExp::from_int(-1)) && !a.contains(NormExp::ONE));
    }

    #[test]
    fn measures() {
        let p5 = Prime::new(5).unwrap();
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(haar_measure(NormExp::from_int(-1), NormExp::ONE, p5).unwrap(), q(1, 4));
        let p2 = Prime::new(2).unwrap();
        assert_eq!(haar_measure(NormExp::from_int(2), NormExp::from_int(3), p2).unwrap(), q(1, 1));
        assert_eq!(haar_measure(NormExp::ONE, NormExp::ONE, p2), Err(Error::BallNotInSphere));
        // the depth-3 partition of a 3-adic sphere has total measure 1
        let p3 = Prime::new(3).unwrap();
        let cells = crate::sphere::sphere_partition(NormExp::ONE, 3, p3).unwrap().len() as i64;
        let each = haar_measure(NormExp::from_int(-3), NormExp::ONE, p3).unwrap();
        assert_eq!(each * q(cells, 1), q(1, 1));
    }
}
