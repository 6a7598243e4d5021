//! Exact forward orbits with finite-time certificates.

use std::collections::VecDeque;

use serde::Serialize;

use super::radius::{is_invariant_radius, radius_map_kind, zeta_threshold, RadiusMapKind};
use crate::map::Map31;
use crate::padic::{height_bits, NormExp, PadicExact};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitOptions {
    pub max_steps: usize,
    /// How many previous iterates are compared against for cycles.
    pub history: usize,
    /// Stop once the numerator or denominator of an iterate exceeds this many bits.
    pub max_bits: u64,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { max_steps: 10_000, history: 64, max_bits: 1 << 20 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitStep {
    pub n: usize,
    pub point: PadicExact,
    pub norm: NormExp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrbitTerminal {
    /// The last iterate repeats one `period` steps earlier.
    FixedOrCycling { period: usize },
    /// Ran out of budget on an invariant sphere, which the orbit never leaves.
    InvariantSphereResident,
    /// Iterate `step` lies where norms provably grow without bound.
    EscapeCertified { step: usize },
    /// Iterate `step` is the pole, so the seed is in the pre-image set of `x_hat`.
    SingularHit { step: usize },
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitTrace {
    pub steps: Vec<OrbitStep>,
    pub terminal: OrbitTerminal,
}

impl OrbitTrace {
    pub fn last(&self) -> &OrbitStep {
        self.steps.last().expect("a trace holds at least the seed")
    }
}

/// Norm region where every further iterate strictly grows. In the zeta case
/// the middle branch `(alpha, alpha^2/delta]` also escapes, but only after
/// finitely many steps; those steps are iterated rather than assumed.
fn in_escape_region(m: &Map31, kind: RadiusMapKind, r: NormExp) -> bool {
    match kind {
        RadiusMapKind::Phi => r > m.beta(),
        RadiusMapKind::Zeta => r > zeta_threshold(m),
        RadiusMapKind::Eta => r > m.alpha(),
    }
}

pub fn run_orbit(m: &Map31, x: &PadicExact, opts: OrbitOptions) -> OrbitTrace {
    let kind = radius_map_kind(m);
    let mut steps = Vec::new();
    let mut window: VecDeque<(usize, PadicExact)> = VecDeque::with_capacity(opts.history + 1);
    let mut cur = x.clone();
    let mut n = 0;
    let terminal = loop {
        let norm = cur.norm();
        steps.push(OrbitStep { n, point: cur.clone(), norm });
        if &cur == m.x_hat() {
            break OrbitTerminal::SingularHit { step: n };
        }
        if let Some(&(k, _)) = window.iter().find(|(_, y)| y == &cur) {
            break OrbitTerminal::FixedOrCycling { period: n - k };
        }
        if in_escape_region(m, kind, norm) {
            break OrbitTerminal::EscapeCertified { step: n };
        }
        if n >= opts.max_steps || height_bits(cur.value()) > opts.max_bits {
            break if is_invariant_radius(m, norm) {
                OrbitTerminal::InvariantSphereResident
            } else {
                OrbitTerminal::BudgetExhausted
            };
        }
        if opts.history > 0 {
            if window.len() == opts.history {
                window.pop_front();
            }
            window.push_back((n, cur.clone()));
        }
        cur = m.eval(&cur).expect("pole handled above");
        n += 1;
    };
    OrbitTrace { steps, terminal }
}

/// Orbit rows `n,num,den,val`; the valuation of zero is written as `inf`.
pub fn orbit_csv(trace: &OrbitTrace) -> String {
    let mut out = String::from("n,num,den,val\n");
    for s in &trace.steps {
        let v = s.point.value();
        out.push_str(&format!("{},{},{},{}\n", s.n, v.numer(), v.denom(), s.point.valuation()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycle() {
        let m = Map31::parse(2, "-9/10", "1/10").unwrap();
        let t = run_orbit(&m, &PadicExact::from_ratio(1, 10, m.prime()), OrbitOptions::default());
        assert_eq!(t.terminal, OrbitTerminal::FixedOrCycling { period: 2 });
        assert_eq!(t.last().n, 2);
        assert_eq!(t.steps[1].point.literal(), "1/5");
    }

    #[test]
    fn fixed_point_and_pole() {
        let m = Map31::parse(2, "-9/10", "1/10").unwrap();
        let t = run_orbit(&m, &PadicExact::zero(m.prime()), OrbitOptions::default());
        assert_eq!(t.terminal, OrbitTerminal::FixedOrCycling { period: 1 });
        let t = run_orbit(&m, m.x_hat(), OrbitOptions::default());
        assert_eq!(t.terminal, OrbitTerminal::SingularHit { step: 0 });
        assert_eq!(t.steps.len(), 1);
    }

    #[test]
    fn siegel_disk_resident() {
        let m = Map31::parse(2, "5/2", "1").unwrap();
        let opts = OrbitOptions { max_bits: 1 << 12, ..OrbitOptions::default() };
        let t = run_orbit(&m, &PadicExact::from_int(4, m.prime()), opts);
        assert_eq!(t.terminal, OrbitTerminal::InvariantSphereResident);
        assert!(t.steps.len() > 3);
        assert!(t.steps.iter().all(|s| s.norm == NormExp::from_int(-2)));
    }

    #[test]
    fn escape_from_large_norm() {
        let m = Map31::parse(2, "5/2", "1").unwrap();
        let t = run_orbit(&m, &PadicExact::from_ratio(1, 4, m.prime()), OrbitOptions::default());
        assert_eq!(t.terminal, OrbitTerminal::EscapeCertified { step: 0 });
    }

    #[test]
    fn csv_rows() {
        let m = Map31::parse(2, "-9/10", "1/10").unwrap();
        let t = run_orbit(&m, &PadicExact::from_ratio(1, 10, m.prime()), OrbitOptions::default());
        assert_eq!(orbit_csv(&t), "n,num,den,val\n0,1,10,-1\n1,1,5,0\n2,1,10,-1\n");
    }
}
