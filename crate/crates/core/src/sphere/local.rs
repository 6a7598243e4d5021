//! Local behaviour on invariant spheres: displacement `rho(r)`, minimal
//! invariant balls, isometry and preserved leading digits.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::radius::{classify_sphere, is_invariant_radius, SphereClass};
use crate::error::{Error, Result};
use crate::map::Map31;
use crate::padic::{digit_expand, p_power, require_integral, NormExp, PadicExact, Prime};

fn require_invariant(m: &Map31, r: NormExp) -> Result<()> {
    if is_invariant_radius(m, r) {
        Ok(())
    } else {
        Err(Error::NotInvariantRadius)
    }
}

/// `|f(c) - c|` for any `c` with `|c| = r`: `r^3/(alpha beta)` inside the
/// Siegel disk, `r^2/delta` on the annulus.
pub fn rho(m: &Map31, r: NormExp) -> Result<NormExp> {
    require_invariant(m, r)?;
    Ok(match classify_sphere(m, r) {
        SphereClass::SiegelInterior => r.pow(3) / (m.alpha() * m.beta()),
        _ => r.pow(2) / m.delta(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalBall {
    pub sphere: NormExp,
    /// Every `V_rho(c)` with `|c| = r` is invariant, and no smaller ball around `c` is.
    pub rho: NormExp,
    /// `(m, V_{r/p^m} is minimal invariant)` from the valuation criteria on `a`, `b`.
    pub by_depth: Vec<(u32, bool)>,
}

pub fn minimal_invariant_ball(m: &Map31, r: NormExp, m_max: u32) -> Result<MinimalBall> {
    let rho = rho(m, r)?;
    let siegel = classify_sphere(m, r) == SphereClass::SiegelInterior;
    let va = m.a().valuation().finite().expect("a != 0");
    let vb = m.b().valuation().finite().expect("b != 0");
    let by_depth = (1..=m_max)
        .map(|k| {
            let k = k as i64;
            let minimal = if siegel {
                r.pow(2) == NormExp::from_int(-vb - k)
            } else {
                r == NormExp::from_int(-va - k)
            };
            (k as u32, minimal)
        })
        .collect();
    Ok(MinimalBall { sphere: r, rho, by_depth })
}

/// `|f(x) - f(y)| = |x - y|` for two points on one invariant sphere.
pub fn local_isometry_check(m: &Map31, x: &PadicExact, y: &PadicExact) -> Result<bool> {
    let r = x.norm();
    if y.norm() != r {
        return Err(Error::NotInvariantRadius);
    }
    require_invariant(m, r)?;
    let (fx, fy) = (m.eval(x)?, m.eval(y)?);
    Ok(fx.distance(&fy) == x.distance(y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DigitPreservation {
    /// `v(x^2/(ax+b))`: digits below this index agree between `x` and `f(x)`.
    pub s: u64,
    /// First index where the expansions of `x` and `f(x)` actually differ.
    pub first_difference: Option<usize>,
}

pub fn digit_preservation_index(m: &Map31, x: &PadicExact) -> Result<DigitPreservation> {
    require_invariant(m, x.norm())?;
    let vx = x.valuation().finite().expect("x != 0 on a sphere");
    let lin = m.a().try_mul(x)?.try_add(m.b())?;
    let vl = lin.valuation().finite().ok_or(Error::SingularPoint)?;
    let s = 2 * vx - vl;
    debug_assert!(s > 0);
    let fx = m.eval(x)?;
    let n = s as u32 + 1;
    let (dx, dfx) = (digit_expand(x, n)?, digit_expand(&fx, n)?);
    let first_difference = if dx.valuation() != dfx.valuation() {
        Some(0)
    } else {
        dx.digits().iter().zip(dfx.digits()).position(|(a, b)| *a != b)
    };
    Ok(DigitPreservation { s: s as u64, first_difference })
}

/// Largest number of cells `sphere_partition` will enumerate.
pub const MAX_CELLS: u64 = 1 << 24;

/// Representatives `p^{-e} u`, `0 < u < p^depth`, `p` not dividing `u`, of the
/// balls of radius `r/p^depth` covering `S_r(0)` with `r = p^e`.
pub fn sphere_partition(r: NormExp, depth: u32, p: Prime) -> Result<Vec<PadicExact>> {
    let e = require_integral(r)?;
    if depth == 0 {
        return Err(Error::InvalidArgument("partition depth must be at least 1".into()));
    }
    let pu = p.get();
    let cells = pu
        .checked_pow(depth)
        .filter(|&n| n <= MAX_CELLS)
        .ok_or_else(|| Error::InvalidArgument(format!("{pu}^{depth} cells is too many")))?;
    let scale = p_power(p, -e);
    Ok((1..cells)
        .filter(|u| u % pu != 0)
        .map(|u| PadicExact::new(&scale * BigRational::from_integer(BigInt::from(u)), p))
        .collect())
}

/// The residue `u mod p^depth` naming the cell of `sphere_partition(|x|, depth)`
/// that contains `x`.
pub fn cell_unit(x: &PadicExact, depth: u32) -> Result<u64> {
    let d = digit_expand(x, depth)?.digits();
    let p = x.prime().get();
    Ok(d.iter().rev().fold(0u64, |acc, &di| acc * p + di))
}

/// `|f^{n+1}(c) - f^n(c)|` for `n = 0..steps`, iterated on `precision`-digit
/// expansions. On an invariant sphere `f` is an isometry, so precision does
/// not decay along the orbit.
pub fn rho_chain(m: &Map31, c: &PadicExact, steps: usize, precision: u32) -> Result<Vec<NormExp>> {
    require_invariant(m, c.norm())?;
    let mut x = digit_expand(c, precision)?;
    let mut out = Vec::with_capacity(steps + 1);
    for _ in 0..=steps {
        let fx = m.eval_approx(&x)?;
        out.push(fx.sub(&x)?.norm()?);
        x = fx;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_map() -> Map31 {
        Map31::parse(2, "5/2", "1").unwrap()
    }

    #[test]
    fn rho_values() {
        let m = phi_map();
        assert_eq!(rho(&m, NormExp::ONE).unwrap(), NormExp::from_int(-1));
        assert_eq!(rho(&m, NormExp::from_int(-2)).unwrap(), NormExp::from_int(-6));
        assert_eq!(rho(&m, NormExp::from_int(1)), Err(Error::NotInvariantRadius));
        // oracle: exact displacement at c = 3 and c = 4
        let p = m.prime();
        for (c, e) in [(3, -1), (4, -6)] {
            let c = PadicExact::from_int(c, p);
            assert_eq!(m.eval(&c).unwrap().distance(&c), NormExp::from_int(e));
        }
    }

    #[test]
    fn minimal_ball_depths() {
        let mb = minimal_invariant_ball(&phi_map(), NormExp::ONE, 3).unwrap();
        assert_eq!(mb.rho, NormExp::from_int(-1));
        assert_eq!(mb.by_depth, vec![(1, true), (2, false), (3, false)]);
    }

    #[test]
    fn isometry_examples() {
        let m = phi_map();
        let p = m.prime();
        let (x, y) = (PadicExact::from_int(3, p), PadicExact::from_int(11, p));
        assert!(local_isometry_check(&m, &x, &y).unwrap());
        assert_eq!(m.eval(&x).unwrap().distance(&m.eval(&y).unwrap()), NormExp::from_int(-3));
        assert!(local_isometry_check(&m, &x, &x).unwrap());
        assert_eq!(
            local_isometry_check(&m, &x, &PadicExact::from_int(2, p)),
            Err(Error::NotInvariantRadius)
        );
    }

    #[test]
    fn preserved_digits() {
        let m = phi_map();
        let d = digit_preservation_index(&m, &PadicExact::from_int(3, m.prime())).unwrap();
        assert_eq!(d, DigitPreservation { s: 1, first_difference: Some(1) });
    }

    #[test]
    fn partitions() {
        let p2 = Prime::new(2).unwrap();
        assert_eq!(sphere_partition(NormExp::ONE, 1, p2).unwrap().len(), 1);
        let reps: Vec<String> =
            sphere_partition(NormExp::ONE, 4, p2).unwrap().iter().map(|c| c.literal()).collect();
        assert_eq!(reps, ["1", "3", "5", "7", "9", "11", "13", "15"]);
        let p3 = Prime::new(3).unwrap();
        let reps: Vec<String> =
            sphere_partition(NormExp::ONE, 1, p3).unwrap().iter().map(|c| c.literal()).collect();
        assert_eq!(reps, ["1", "2"]);
        assert_eq!(sphere_partition(NormExp::from_ratio(1, 2), 1, p3), Err(Error::NonIntegralRadius));
        let scaled = sphere_partition(NormExp::from_int(1), 2, p3).unwrap();
        assert_eq!(scaled[0].literal(), "1/3");
        assert_eq!(scaled.len(), 6);
    }

    #[test]
    fn chain_matches_rho() {
        let m = phi_map();
        let c = PadicExact::from_int(3, m.prime());
        let chain = rho_chain(&m, &c, 50, 64).unwrap();
        assert!(chain.iter().all(|&r| r == NormExp::from_int(-1)));
    }
}
