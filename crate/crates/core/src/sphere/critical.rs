//! Points on critical spheres, where `|f(x)|` depends on more than `|x|`.

use serde::Serialize;

use super::radius::{classify_sphere, radius_map_kind, RadiusMapKind, SphereClass};
use crate::error::{Error, Result};
use crate::map::Map31;
use crate::padic::{NormExp, PadicExact};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CriticalVerdict {
    StaysCritical,
    /// `f(x)` lies on an invariant sphere, so every later iterate stays there.
    LandsInvariant { radius: NormExp },
    /// `S_alpha -> S_beta` or back.
    TransfersToOther,
    EscapeCertified,
    /// `f(x) = 0`, the fixed point.
    HitsFixedPoint,
}

pub fn critical_sphere_image(m: &Map31, x: &PadicExact) -> Result<(NormExp, CriticalVerdict)> {
    let r = x.norm();
    let from = classify_sphere(m, r);
    if !matches!(from, SphereClass::CriticalAlpha | SphereClass::CriticalBeta) || r.is_zero() {
        return Err(Error::NotCriticalSphere);
    }
    let s = m.norm_f(x)?;
    if s.is_zero() {
        return Ok((s, CriticalVerdict::HitsFixedPoint));
    }
    let verdict = match classify_sphere(m, s) {
        c if c.is_invariant() => CriticalVerdict::LandsInvariant { radius: s },
        c if c == from => CriticalVerdict::StaysCritical,
        SphereClass::CriticalAlpha | SphereClass::CriticalBeta => CriticalVerdict::TransfersToOther,
        _ => CriticalVerdict::EscapeCertified,
    };
    debug_assert!(verdict != CriticalVerdict::EscapeCertified || escapes(m, s));
    Ok((s, verdict))
}

fn escapes(m: &Map31, s: NormExp) -> bool {
    match radius_map_kind(m) {
        RadiusMapKind::Phi => s > m.beta(),
        _ => s > m.alpha(),
    }
}
