//! One function per CLI command, each producing a [`Report`] and optional CSV.

use num_rational::BigRational;
use serde_json::{json, Value};

use super::config::RunConfig;
use super::Report;
use crate::ergodic::{
    equidistribution_probe, ergodicity_verdict, invariant_radius_set, ErgodicityVerdict, Mod4Profile, Witness,
};
use crate::error::{Error, Result};
use crate::map::{FixedPointStructure, Map31, Map31General};
use crate::padic::literal::{format_rational, parse_rational};
use crate::padic::{p_power, NormExp, PadicExact, Prime};
use crate::periodic::{build_2periodic, claim_warnings, b_radius_implies_a_not_unit, scan_q_grid, PeriodicOrbitCert};
use crate::sphere::{
    apply_radius_map, classify_sphere, critical_sphere_image, digit_preservation_index, is_invariant_radius,
    minimal_invariant_ball, orbit_csv, preimage_radius_ladder, radius_map_kind, rho, run_orbit, sphere_partition,
    CriticalVerdict, OrbitOptions, OrbitTerminal, RadiusMapKind, SphereClass,
};

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub report: Report,
    pub csv: Option<String>,
}

fn prime(cfg: &RunConfig) -> Result<Prime> {
    Prime::new(cfg.p.ok_or_else(|| missing("p"))?)
}

fn missing(flag: &str) -> Error {
    Error::InvalidArgument(format!("missing --{flag}"))
}

fn rat(v: &Option<String>, flag: &str) -> Result<BigRational> {
    parse_rational(v.as_deref().ok_or_else(|| missing(flag))?)
}

fn is_general(cfg: &RunConfig) -> bool {
    cfg.c.is_some() || cfg.d.is_some() || cfg.e.is_some()
}

fn general_map(cfg: &RunConfig) -> Result<Map31General> {
    Map31General::new(
        prime(cfg)?,
        rat(&cfg.a, "a")?,
        rat(&cfg.b, "b")?,
        rat(&cfg.c, "c")?,
        rat(&cfg.d, "d")?,
        rat(&cfg.e, "e")?,
    )
}

/// The canonical map, plus the reduction step when general coefficients were given.
fn resolve_map(cfg: &RunConfig) -> Result<(Map31, Value)> {
    if !is_general(cfg) {
        let p = prime(cfg)?;
        let a = PadicExact::new(rat(&cfg.a, "a")?, p);
        let b = PadicExact::new(rat(&cfg.b, "b")?, p);
        return Ok((Map31::new(p, a, b)?, Value::Null));
    }
    let g = general_map(cfg)?;
    let (x0, m) = g.reduce_to_canonical()?;
    let step = json!({
        "fixed_point": x0.literal(),
        "A": m.a().literal(),
        "B": m.b().literal(),
    });
    Ok((m, step))
}

fn exp(r: NormExp) -> Value {
    Value::String(r.exp_literal())
}

fn r_exps(cfg: &RunConfig) -> Result<Vec<NormExp>> {
    cfg.r_exp.iter().map(|s| NormExp::parse_exp(s)).collect()
}

pub fn map_summary(m: &Map31) -> Value {
    json!({
        "p": m.prime().get(),
        "a": m.a().literal(),
        "b": m.b().literal(),
        "case": radius_map_kind(m).name(),
        "alpha_exp": exp(m.alpha()),
        "beta_exp": exp(m.beta()),
        "delta_exp": exp(m.delta()),
        "x_hat": m.x_hat().literal(),
        "siegel_radius_exp": exp(m.alpha()),
        "invariant_radii": invariant_radius_set(m).to_string(),
    })
}

fn report(command: &'static str, m: Option<&Map31>, payload: Value, mut warnings: Vec<String>) -> Report {
    if let Some(m) = m {
        warnings.extend(claim_warnings(m));
    }
    Report { command, map: m.map(map_summary), payload, warnings }
}

fn sphere_row(m: &Map31, r: NormExp) -> Value {
    let class = classify_sphere(m, r);
    let image = match apply_radius_map(m, r) {
        Ok(s) => exp(s),
        Err(_) => Value::String("critical".into()),
    };
    json!({ "r_exp": exp(r), "class": class.name(), "invariant": class.is_invariant(), "image_exp": image })
}

/// Integer exponents from just below `alpha` to just above `beta`.
fn default_radii(m: &Map31) -> Vec<NormExp> {
    let lo = m.alpha().exp().unwrap().floor().to_integer() - 1;
    let hi = m.beta().exp().unwrap().ceil().to_integer() + 1;
    (lo..=hi).map(NormExp::from_int).collect()
}

pub fn cmd_classify(cfg: &RunConfig) -> Result<Output> {
    let (m, reduction) = resolve_map(cfg)?;
    let mut radii = r_exps(cfg)?;
    if radii.is_empty() {
        radii = default_radii(&m);
    }
    let payload = json!({
        "reduction": reduction,
        "spheres": radii.iter().map(|&r| sphere_row(&m, r)).collect::<Vec<_>>(),
        "b_radius_implies_a_not_unit": b_radius_implies_a_not_unit(&m),
    });
    Ok(Output { report: report("classify", Some(&m), payload, Vec::new()), csv: None })
}

fn terminal_json(t: OrbitTerminal) -> Value {
    match t {
        OrbitTerminal::FixedOrCycling { period } => json!({ "kind": "fixed_or_cycling", "period": period }),
        OrbitTerminal::InvariantSphereResident => json!({ "kind": "invariant_sphere_resident" }),
        OrbitTerminal::EscapeCertified { step } => json!({ "kind": "escape_certified", "step": step }),
        OrbitTerminal::SingularHit { step } => json!({ "kind": "singular_hit", "step": step }),
        OrbitTerminal::BudgetExhausted => json!({ "kind": "budget_exhausted" }),
    }
}

pub fn cmd_orbit(cfg: &RunConfig) -> Result<Output> {
    let (m, _) = resolve_map(cfg)?;
    let x = m.point(rat(&cfg.x, "x")?);
    let mut opts = OrbitOptions::default();
    if let Some(s) = cfg.steps {
        opts.max_steps = s;
    }
    if let Some(b) = cfg.max_bits {
        opts.max_bits = b;
    }
    let trace = run_orbit(&m, &x, opts);
    let steps: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| json!({ "n": s.n, "point": s.point.literal(), "norm_exp": exp(s.norm) }))
        .collect();
    let payload = json!({ "seed": x.literal(), "terminal": terminal_json(trace.terminal), "steps": steps });
    Ok(Output { report: report("orbit", Some(&m), payload, Vec::new()), csv: Some(orbit_csv(&trace)) })
}

fn first_radius(cfg: &RunConfig) -> Result<Option<NormExp>> {
    Ok(r_exps(cfg)?.into_iter().next())
}

pub fn cmd_spheres(cfg: &RunConfig) -> Result<Output> {
    let (m, _) = resolve_map(cfg)?;
    let r = first_radius(cfg)?.ok_or_else(|| missing("r-exp"))?;
    let mut payload = sphere_row(&m, r);
    if is_invariant_radius(&m, r) {
        let mb = minimal_invariant_ball(&m, r, cfg.m.unwrap_or(4))?;
        payload["rho_exp"] = exp(rho(&m, r)?);
        payload["minimal_ball_by_depth"] = mb
            .by_depth
            .iter()
            .map(|&(k, minimal)| json!({ "m": k, "minimal": minimal }))
            .collect();
    }
    if let (Some(depth), Some(_)) = (cfg.depth, r.integral_exp()) {
        let reps = sphere_partition(r, depth, m.prime())?;
        payload["partition"] = reps.iter().map(|c| Value::String(c.literal())).collect();
    }
    if let Some(x) = &cfg.x {
        let x = m.point(parse_rational(x)?);
        payload["point"] = point_analysis(&m, &x)?;
    }
    Ok(Output { report: report("spheres", Some(&m), payload, Vec::new()), csv: None })
}

fn point_analysis(m: &Map31, x: &PadicExact) -> Result<Value> {
    let r = x.norm();
    let mut v = json!({ "x": x.literal(), "norm_exp": exp(r) });
    match classify_sphere(m, r) {
        SphereClass::CriticalAlpha | SphereClass::CriticalBeta if !r.is_zero() => {
            let (s, verdict) = critical_sphere_image(m, x)?;
            v["image_norm_exp"] = exp(s);
            v["critical_verdict"] = Value::String(
                match verdict {
                    CriticalVerdict::StaysCritical => "stays_critical",
                    CriticalVerdict::LandsInvariant { .. } => "lands_invariant",
                    CriticalVerdict::TransfersToOther => "transfers_to_other",
                    CriticalVerdict::EscapeCertified => "escape_certified",
                    CriticalVerdict::HitsFixedPoint => "hits_fixed_point",
                }
                .into(),
            );
        }
        c if c.is_invariant() && !r.is_zero() => {
            let d = digit_preservation_index(m, x)?;
            v["preserved_digits"] = json!(d.s);
            v["first_differing_digit"] = json!(d.first_difference);
        }
        _ => v["image_norm_exp"] = exp(m.norm_f(x)?),
    }
    Ok(v)
}

fn mod4_json(p: &Mod4Profile) -> Value {
    json!({
        "A1": p.a1, "A2": p.a2, "B1": p.b1, "B2": p.b2,
        "case": p.case, "interchanged": p.interchanged,
    })
}

fn witness_json(w: &Witness) -> Value {
    let kind = match &w.kind {
        crate::ergodic::WitnessKind::FirstDigitBall => json!("first_digit_ball"),
        crate::ergodic::WitnessKind::MinimalInvariantBall => json!("minimal_invariant_ball"),
        crate::ergodic::WitnessKind::CellCycle { depth, cells } => json!({ "cell_cycle": { "depth": depth, "cells": cells } }),
    };
    json!({
        "center": w.center.literal(),
        "radius_exp": exp(w.radius),
        "measure": format_rational(&w.measure),
        "kind": kind,
    })
}

/// The frozen verdict object: `sphere_exp`, `verdict`, `reason`, `memic`, `witness_ball`.
pub fn verdict_json(r: NormExp, v: &ErgodicityVerdict) -> Value {
    let (reason, profile_json, witness) = match v {
        ErgodicityVerdict::NotErgodic { reason, witness } => {
            (reason.describe().to_string(), Value::Null, witness.as_ref().map(witness_json).unwrap_or(Value::Null))
        }
        ErgodicityVerdict::Ergodic { profile, scaling } => (
            format!("mod-4 criterion holds after conjugating by 2^{scaling}"),
            mod4_json(profile),
            Value::Null,
        ),
        ErgodicityVerdict::Undecided { reason, profile } => {
            (reason.clone(), profile.as_ref().map(mod4_json).unwrap_or(Value::Null), Value::Null)
        }
    };
    json!({
        "sphere_exp": exp(r),
        "verdict": v.label(),
        "reason": reason,
        "memic": profile_json,
        "witness_ball": witness,
    })
}

pub fn cmd_ergodicity(cfg: &RunConfig) -> Result<Output> {
    let (m, _) = resolve_map(cfg)?;
    let r = match first_radius(cfg)? {
        Some(r) => r,
        None if m.prime().get() == 2 && radius_map_kind(&m) == RadiusMapKind::Phi => m.beta().shrink(1),
        None => return Err(missing("r-exp")),
    };
    let verdict = ergodicity_verdict(&m, r)?;
    let mut payload = verdict_json(r, &verdict);
    let mut csv = None;
    let iters = cfg.iters.unwrap_or(0);
    if iters > 0 {
        let e = r.integral_exp().ok_or(Error::NonIntegralRadius)?;
        let seed = match &cfg.x {
            Some(x) => m.point(parse_rational(x)?),
            None => PadicExact::new(p_power(m.prime(), -e), m.prime()),
        };
        let depth = cfg.depth.unwrap_or(4);
        let table = equidistribution_probe(&m, r, &seed, iters, depth)?;
        payload["probe"] = json!({
            "seed": seed.literal(), "iters": iters, "depth": depth,
            "cells_visited": table.counts.len(),
        });
        csv = Some(table.to_csv()?);
    }
    Ok(Output { report: report("ergodicity", Some(&m), payload, Vec::new()), csv })
}

/// The frozen certificate object.
pub fn cert_json(c: &PeriodicOrbitCert) -> Value {
    json!({
        "q": format_rational(&c.q),
        "a": c.a.literal(),
        "b": c.b.literal(),
        "orbit": c.orbit.as_ref().map(|(t1, t2)| vec![t1.literal(), t2.literal()]),
        "norm_exps": c.norms.map(|(n1, n2)| vec![n1.exp_literal(), n2.exp_literal()]),
        "r_in_A": c.r_in_a,
        "sqrt_disc_exists": c.sqrt_disc_exists,
        "verified": c.verified,
        "multiplier_norm_exp": c.multiplier_norm.map(|n| n.exp_literal()),
    })
}

pub fn cmd_periodic(cfg: &RunConfig) -> Result<Output> {
    let p = prime(cfg)?;
    if cfg.grid_num.is_some() || cfg.grid_den.is_some() {
        let (n, d) = (cfg.grid_num.unwrap_or(10), cfg.grid_den.unwrap_or(3));
        let all = scan_q_grid(n, d, p);
        let kept: Vec<Value> = all.iter().filter(|c| c.meets_checklist()).map(cert_json).collect();
        let payload = json!({ "scanned": all.len(), "certificates": kept });
        return Ok(Output { report: report("periodic", None, payload, Vec::new()), csv: None });
    }
    let q = rat(&cfg.q, "q")?;
    let cert = build_2periodic(&q, p)?;
    let m = Map31::new(p, cert.a.clone(), cert.b.clone())?;
    let warnings = cert.failure.iter().cloned().collect();
    Ok(Output { report: report("periodic", Some(&m), cert_json(&cert), warnings), csv: None })
}

pub fn ladder_csv(rungs: &[crate::sphere::LadderRung]) -> String {
    let mut out = String::from("k,exp_num,exp_den\n");
    for r in rungs {
        let e = r.radius.exp().expect("positive radius");
        out.push_str(&format!("{},{},{}\n", r.k, e.numer(), e.denom()));
    }
    out
}

pub fn cmd_radii(cfg: &RunConfig) -> Result<Output> {
    let (m, _) = resolve_map(cfg)?;
    let rungs = preimage_radius_ladder(&m, cfg.kmax.unwrap_or(10))?;
    let payload = json!({
        "threshold_exp": exp(crate::sphere::zeta_threshold(&m)),
        "rungs": rungs
            .iter()
            .map(|r| json!({ "k": r.k, "exp": exp(r.radius), "identity_holds": r.identity_holds }))
            .collect::<Vec<_>>(),
    });
    Ok(Output { report: report("radii", Some(&m), payload, Vec::new()), csv: Some(ladder_csv(&rungs)) })
}

fn structure_json(s: &FixedPointStructure) -> Value {
    let lit = |r: &BigRational| format_rational(r);
    match s {
        FixedPointStructure::TripleRoot(x0) => json!({ "kind": "triple_root", "root": lit(x0) }),
        FixedPointStructure::DoubleAndSimple { double, simple } => {
            json!({ "kind": "double_and_simple", "double": lit(double), "simple": lit(simple) })
        }
        FixedPointStructure::ThreeDistinct { rational_roots, residual } => json!({
            "kind": "three_distinct",
            "rational_roots": rational_roots.iter().map(lit).collect::<Vec<_>>(),
            "residual_factor": residual.as_ref().map(|p| p.to_string()),
        }),
    }
}

pub fn cmd_reduce(cfg: &RunConfig) -> Result<Output> {
    if !is_general(cfg) {
        let (m, _) = resolve_map(cfg)?;
        let payload = json!({ "reduction": Value::Null });
        return Ok(Output { report: report("reduce", Some(&m), payload, Vec::new()), csv: None });
    }
    let g = general_map(cfg)?;
    let structure = g.fixed_point_structure();
    let (x0, m) = g.reduce_to_canonical()?;
    let payload = json!({
        "fixed_points": structure_json(&structure),
        "reduction": { "fixed_point": x0.literal(), "A": m.a().literal(), "B": m.b().literal() },
    });
    Ok(Output { report: report("reduce", Some(&m), payload, Vec::new()), csv: None })
}
