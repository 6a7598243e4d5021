//! Root norms of `x^2 + a x + b` from the Newton polygon.

use num_rational::Rational64;

use super::exact::PadicExact;
use super::norm::{NormExp, Valuation};
use crate::error::{Error, Result};

/// Norms of the two roots of `x^2 + a x + b`, with `alpha <= beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootNorms {
    pub alpha: NormExp,
    pub beta: NormExp,
}

pub fn root_norms_newton(a: &PadicExact, b: &PadicExact) -> Result<RootNorms> {
    if a.prime() != b.prime() {
        return Err(Error::PrimeMismatch(a.prime().get(), b.prime().get()));
    }
    let vb = b.valuation().finite().ok_or(Error::ZeroB)?;
    // Vertices (0, v(b)), (1, v(a)), (2, 0). The middle vertex lies strictly
    // below the chord iff 2 v(a) < v(b); then the slopes split.
    let (v_small, v_large) = match a.valuation() {
        Valuation::Finite(va) if 2 * va < vb => (
            Rational64::from_integer(va),
            Rational64::from_integer(vb - va),
        ),
        _ => {
            let half = Rational64::new(vb, 2);
            (half, half)
        }
    };
    // Larger valuation is the smaller norm.
    Ok(RootNorms { alpha: NormExp::Exp(-v_large), beta: NormExp::Exp(-v_small) })
}
