//! Ergodicity of `f` on an invariant sphere with respect to normalized Haar
//! measure, with constructive evidence for every verdict.

use std::collections::HashMap;

use num_rational::BigRational;
use serde::Serialize;

use super::measure::haar_measure;
use super::mod4::{mod4_for_scaling, Mod4Profile};
use crate::error::{Error, Result};
use crate::map::Map31;
use crate::padic::{require_integral, NormExp, PadicExact};
use crate::sphere::{cell_unit, is_invariant_radius, radius_map_kind, rho, sphere_partition, RadiusMapKind};

/// Deepest partition searched for a proper invariant union of cells.
pub const MAX_WITNESS_DEPTH: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NonErgodicReason {
    /// `p >= 3`: leading digits are preserved.
    OddPrime,
    /// `p = 2`, `alpha = beta`.
    EqualRootNorms,
    /// `p = 2`, `alpha < beta`, sphere other than `S_{beta/2}`.
    AwayFromHalfBeta,
}

impl NonErgodicReason {
    pub fn describe(self) -> &'static str {
        match self {
            NonErgodicReason::OddPrime => "p >= 3: every first-digit ball is invariant",
            NonErgodicReason::EqualRootNorms => "p = 2 with alpha = beta",
            NonErgodicReason::AwayFromHalfBeta => "p = 2 with alpha < beta and r != beta/2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// `V_{r/p}(c)`, fixed because `f` keeps the leading digit.
    FirstDigitBall,
    /// `V_rho(c)`, the smallest invariant ball around `c`.
    MinimalInvariantBall,
    /// A cycle of the permutation `f` induces on the depth-`depth` cells;
    /// `cells` are the residues naming them, the center's cell first.
    CellCycle { depth: u32, cells: Vec<u64> },
}

/// An invariant set of measure strictly between 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub center: PadicExact,
    pub radius: NormExp,
    pub kind: WitnessKind,
    #[serde(serialize_with = "crate::padic::literal::serialize_rational")]
    pub measure: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ErgodicityVerdict {
    NotErgodic { reason: NonErgodicReason, witness: Option<Witness> },
    /// The conjugated map on the unit sphere satisfies the mod-4 criterion.
    Ergodic { profile: Mod4Profile, scaling: i64 },
    /// Outside every available criterion. `profile` is the criterion evaluated
    /// anyway where the conjugated pair is a valid self-map.
    Undecided { reason: String, profile: Option<Mod4Profile> },
}

impl ErgodicityVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            ErgodicityVerdict::NotErgodic { .. } => "not_ergodic",
            ErgodicityVerdict::Ergodic { .. } => "ergodic",
            ErgodicityVerdict::Undecided { .. } => "undecided",
        }
    }
}

fn half_beta(m: &Map31) -> NormExp {
    m.beta().shrink(1)
}

pub fn splitting_verdict(m: &Map31, r: NormExp) -> Result<ErgodicityVerdict> {
    if !is_invariant_radius(m, r) {
        return Err(Error::NotInvariantRadius);
    }
    let e = require_integral(r)?;
    let p = m.prime();
    let reason = if p.get() >= 3 {
        NonErgodicReason::OddPrime
    } else if m.alpha() == m.beta() {
        NonErgodicReason::EqualRootNorms
    } else if r != half_beta(m) {
        NonErgodicReason::AwayFromHalfBeta
    } else {
        return Ok(ErgodicityVerdict::Undecided {
            reason: "p = 2, alpha < beta, r = beta/2: decided by the mod-4 criterion".into(),
            profile: None,
        });
    };
    let center = PadicExact::new(crate::padic::p_power(p, -e), p);
    let witness = if reason == NonErgodicReason::OddPrime {
        let radius = r.shrink(1);
        let measure = haar_measure(radius, r, p)?;
        Some(Witness { center, radius, kind: WitnessKind::FirstDigitBall, measure })
    } else {
        two_adic_witness(m, r, center)?
    };
    Ok(ErgodicityVerdict::NotErgodic { reason, witness })
}

/// On a 2-adic sphere the first-digit ball is the whole sphere, so use the
/// minimal invariant ball when it is a proper subset, else a proper cycle of
/// cells.
fn two_adic_witness(m: &Map31, r: NormExp, center: PadicExact) -> Result<Option<Witness>> {
    let p = m.prime();
    let rho = rho(m, r)?;
    if rho <= r.shrink(2) {
        let measure = haar_measure(rho, r, p)?;
        return Ok(Some(Witness { center, radius: rho, kind: WitnessKind::MinimalInvariantBall, measure }));
    }
    for depth in 2..=MAX_WITNESS_DEPTH {
        let cycle = cell_cycle(m, r, depth, &center)?;
        let total = 1u64 << (depth - 1);
        if (cycle.len() as u64) < total {
            let radius = r.shrink(depth as i64);
            let measure = haar_measure(radius, r, p)? * BigRational::from_integer(cycle.len().into());
            return Ok(Some(Witness { center, radius, kind: WitnessKind::CellCycle { depth, cells: cycle }, measure }));
        }
    }
    Ok(None)
}

/// The cycle through `center`'s cell of the permutation `f` induces on the
/// depth-`depth` cells of `S_r(0)`.
pub fn cell_cycle(m: &Map31, r: NormExp, depth: u32, center: &PadicExact) -> Result<Vec<u64>> {
    let reps = sphere_partition(r, depth, m.prime())?;
    let mut image = HashMap::with_capacity(reps.len());
    for c in &reps {
        image.insert(cell_unit(c, depth)?, cell_unit(&m.eval(c)?, depth)?);
    }
    let start = cell_unit(center, depth)?;
    let mut cycle = vec![start];
    let mut cur = image[&start];
    while cur != start {
        cycle.push(cur);
        cur = image[&cur];
    }
    Ok(cycle)
}

/// `S_{beta/2}(0)` for `p = 2` and `alpha < beta`: conjugate by `2^{1-m}`
/// with `beta = 2^m` onto the unit sphere and apply the mod-4 criterion.
pub fn half_beta_verdict(m: &Map31) -> Result<ErgodicityVerdict> {
    if m.prime().get() != 2 || radius_map_kind(m) != RadiusMapKind::Phi {
        return Err(Error::WrongPrimeOrCase);
    }
    let big_m = require_integral(m.beta())?;
    let q = require_integral(m.alpha())?;
    let s = 1 - big_m;
    let attempt = mod4_for_scaling(m, s).map(|(_, _, profile)| profile);
    if q <= big_m - 2 {
        return Ok(match attempt {
            Ok(profile) if profile.ergodic => ErgodicityVerdict::Ergodic { profile, scaling: s },
            Ok(profile) => ErgodicityVerdict::Undecided {
                reason: "4 alpha <= beta but no residue pattern matched".into(),
                profile: Some(profile),
            },
            Err(e) => ErgodicityVerdict::Undecided {
                reason: format!("4 alpha <= beta but the conjugated pair is not usable: {e}"),
                profile: None,
            },
        });
    }
    Ok(ErgodicityVerdict::Undecided {
        reason: "p = 2, beta = 2 alpha: no criterion applies".into(),
        profile: attempt.ok(),
    })
}

/// Non-ergodicity where it is known, else the mod-4 route on `S_{beta/2}`.
pub fn ergodicity_verdict(m: &Map31, r: NormExp) -> Result<ErgodicityVerdict> {
    match splitting_verdict(m, r)? {
        ErgodicityVerdict::Undecided { .. } => half_beta_verdict(m),
        v => Ok(v),
    }
}
