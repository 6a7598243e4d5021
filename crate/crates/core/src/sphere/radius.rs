//! How `f` acts on the norms of points: the three radius maps and the
//! sphere classification they induce.

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::map::Map31;
use crate::padic::NormExp;

/// Which radius map governs `|f(x)|`. `alpha <= beta` always holds, so the
/// three cases are exhaustive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RadiusMapKind {
    /// `alpha < beta = delta`
    Phi,
    /// `delta < alpha = beta`
    Zeta,
    /// `delta = alpha = beta`
    Eta,
}

impl RadiusMapKind {
    pub fn name(self) -> &'static str {
        match self {
            RadiusMapKind::Phi => "phi",
            RadiusMapKind::Zeta => "zeta",
            RadiusMapKind::Eta => "eta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SphereClass {
    /// `r < alpha`: inside the Siegel disk of the fixed point.
    SiegelInterior,
    /// `alpha < r < beta`, distinct root norms only.
    InvariantAnnulus,
    CriticalAlpha,
    /// `r = beta` with `alpha < beta`.
    CriticalBeta,
    Escaping,
}

impl SphereClass {
    pub fn is_invariant(self) -> bool {
        matches!(self, SphereClass::SiegelInterior | SphereClass::InvariantAnnulus)
    }

    pub fn name(self) -> &'static str {
        match self {
            SphereClass::SiegelInterior => "siegel_interior",
            SphereClass::InvariantAnnulus => "invariant_annulus",
            SphereClass::CriticalAlpha => "critical_alpha",
            SphereClass::CriticalBeta => "critical_beta",
            SphereClass::Escaping => "escaping",
        }
    }
}

pub fn radius_map_kind(m: &Map31) -> RadiusMapKind {
    if m.alpha() < m.beta() {
        RadiusMapKind::Phi
    } else if m.delta() < m.alpha() {
        RadiusMapKind::Zeta
    } else {
        RadiusMapKind::Eta
    }
}

/// `alpha^2 / delta`, where the middle and upper branches of the zeta map meet.
pub fn zeta_threshold(m: &Map31) -> NormExp {
    m.alpha().pow(2) / m.delta()
}

pub fn classify_sphere(m: &Map31, r: NormExp) -> SphereClass {
    let (alpha, beta) = (m.alpha(), m.beta());
    if r < alpha {
        SphereClass::SiegelInterior
    } else if r == alpha {
        SphereClass::CriticalAlpha
    } else if alpha < beta && r < beta {
        SphereClass::InvariantAnnulus
    } else if alpha < beta && r == beta {
        SphereClass::CriticalBeta
    } else {
        SphereClass::Escaping
    }
}

/// `S_r(0)` is mapped into itself.
pub fn is_invariant_radius(m: &Map31, r: NormExp) -> bool {
    !r.is_zero() && classify_sphere(m, r).is_invariant()
}

fn is_critical(m: &Map31, kind: RadiusMapKind, r: NormExp) -> bool {
    r == m.alpha()
        || (kind == RadiusMapKind::Phi && r == m.beta())
        || (kind == RadiusMapKind::Zeta && r == zeta_threshold(m))
}

fn exp(r: NormExp) -> Rational64 {
    r.exp().expect("nonzero radius")
}

/// `|f(x)|` for any `x` with `|x| = r`, when that is a function of `r` alone.
pub fn apply_radius_map(m: &Map31, r: NormExp) -> Result<NormExp> {
    let kind = radius_map_kind(m);
    if r.is_zero() {
        return Ok(r);
    }
    if is_critical(m, kind, r) {
        return Err(Error::CriticalRadius);
    }
    let (e, a, b, d) = (exp(r), exp(m.alpha()), exp(m.beta()), exp(m.delta()));
    let out = match kind {
        _ if r < m.alpha() => e,
        RadiusMapKind::Phi if r < m.beta() => e,
        RadiusMapKind::Phi => e * 2 - b,
        RadiusMapKind::Zeta if r < zeta_threshold(m) => e * 3 - a * 2,
        RadiusMapKind::Zeta => e * 2 - d,
        RadiusMapKind::Eta => e * 2 - a,
    };
    Ok(NormExp::Exp(out))
}

/// One rung of the zeta pre-image ladder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderRung {
    pub k: u32,
    pub radius: NormExp,
    /// `zeta^k(r_k) = alpha^2 / delta`, re-derived with the radius map.
    pub identity_holds: bool,
}

/// Radii `r_k` with `zeta^k(r_k) = alpha^2/delta`:
/// `exp(r_k) = exp(alpha) + (exp(alpha) - exp(delta)) / 3^k`.
pub fn preimage_radius_ladder(m: &Map31, k_max: u32) -> Result<Vec<LadderRung>> {
    if radius_map_kind(m) != RadiusMapKind::Zeta {
        return Err(Error::WrongCase);
    }
    // keeps 3^k and the exponent arithmetic well inside i64
    if k_max > 30 {
        return Err(Error::ExponentOverflow);
    }
    let (a, d) = (exp(m.alpha()), exp(m.delta()));
    let target = zeta_threshold(m);
    (0..=k_max)
        .map(|k| {
            let radius = NormExp::Exp(a + (a - d) / 3i64.pow(k));
            let mut r = radius;
            for _ in 0..k {
                r = apply_radius_map(m, r)?;
            }
            Ok(LadderRung { k, radius, identity_holds: r == target })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(p: u64, a: &str, b: &str) -> Map31 {
        Map31::parse(p, a, b).unwrap()
    }

    #[test]
    fn case_table() {
        assert_eq!(radius_map_kind(&map(2, "5/2", "1")), RadiusMapKind::Phi);
        assert_eq!(radius_map_kind(&map(2, "2", "1")), RadiusMapKind::Zeta);
        assert_eq!(radius_map_kind(&map(2, "1", "1")), RadiusMapKind::Eta);
    }

    #[test]
    fn branches() {
        let phi = map(2, "5/2", "1");
        assert_eq!(apply_radius_map(&phi, NormExp::from_int(-3)).unwrap(), NormExp::from_int(-3));
        assert_eq!(apply_radius_map(&phi, NormExp::from_int(2)).unwrap(), NormExp::from_int(3));
        assert_eq!(apply_radius_map(&phi, NormExp::from_int(1)), Err(Error::CriticalRadius));
        assert_eq!(apply_radius_map(&phi, NormExp::from_int(-1)), Err(Error::CriticalRadius));

        let zeta = map(2, "2", "1");
        assert_eq!(zeta_threshold(&zeta), NormExp::from_int(1));
        assert_eq!(apply_radius_map(&zeta, NormExp::from_ratio(1, 2)).unwrap(), NormExp::from_ratio(3, 2));
        assert_eq!(apply_radius_map(&zeta, NormExp::from_int(3)).unwrap(), NormExp::from_int(7));
        assert_eq!(apply_radius_map(&zeta, NormExp::from_int(1)), Err(Error::CriticalRadius));

        let eta = map(2, "1", "1");
        assert_eq!(apply_radius_map(&eta, NormExp::from_int(2)).unwrap(), NormExp::from_int(4));
    }

    #[test]
    fn classification() {
        let phi = map(2, "5/2", "1");
        assert_eq!(classify_sphere(&phi, NormExp::ONE), SphereClass::InvariantAnnulus);
        assert_eq!(classify_sphere(&phi, NormExp::from_int(-2)), SphereClass::SiegelInterior);
        assert_eq!(classify_sphere(&phi, NormExp::from_int(2)), SphereClass::Escaping);
        assert_eq!(classify_sphere(&phi, NormExp::from_int(1)), SphereClass::CriticalBeta);
        let zeta = map(2, "2", "1");
        assert_eq!(classify_sphere(&zeta, NormExp::ONE), SphereClass::CriticalAlpha);
        assert_eq!(classify_sphere(&zeta, NormExp::from_ratio(1, 2)), SphereClass::Escaping);
        assert!(!is_invariant_radius(&zeta, NormExp::Zero));
    }

    #[test]
    fn ladder() {
        let zeta = map(2, "2", "1");
        let rungs = preimage_radius_ladder(&zeta, 10).unwrap();
        assert_eq!(rungs[0].radius, NormExp::from_int(1));
        assert_eq!(rungs[1].radius, NormExp::from_ratio(1, 3));
        assert!(rungs.iter().all(|r| r.identity_holds));
        assert_eq!(preimage_radius_ladder(&map(2, "1", "1"), 3), Err(Error::WrongCase));
    }
}
