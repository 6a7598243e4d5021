//! The general (3,1)-rational map `(x^3 + a x^2 + b x + c) / (d x + e)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::canonical::Map31;
use crate::error::{Error, Result};
use crate::padic::{PadicExact, Prime};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Map31General {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
    pub e: BigRational,
    pub prime: Prime,
}

/// Multiplicity pattern of the fixed-point cubic over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedPointStructure {
    TripleRoot(BigRational),
    DoubleAndSimple { double: BigRational, simple: BigRational },
    /// Three distinct roots in the algebraic closure. Rational ones are listed;
    /// the rest are described by the leftover factor (degree 2 or 3, no rational
    /// roots), or by the whole cubic if its coefficients were too large to search.
    ThreeDistinct { rational_roots: Vec<BigRational>, residual: Option<Poly> },
}

impl Map31General {
    pub fn new(
        prime: Prime,
        a: BigRational,
        b: BigRational,
        c: BigRational,
        d: BigRational,
        e: BigRational,
    ) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroLeadingDenominator);
        }
        Ok(Map31General { a, b, c, d, e, prime })
    }

    /// Rebuild a general map from its fixed point `x0` and canonical pair `(A, B)`.
    pub fn from_canonical(prime: Prime, x0: &BigRational, big_a: &BigRational, big_b: &BigRational) -> Result<Self> {
        let three = BigRational::from_integer(3.into());
        let d = big_a.clone();
        let a = &d - &three * x0;
        let e = big_b - &d * x0;
        let b = &three * x0 * x0 + &e;
        let c = -(x0 * x0 * x0);
        Self::new(prime, a, b, c, d, e)
    }

    pub fn singular_point(&self) -> BigRational {
        -&self.e / &self.d
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let den = &self.d * x + &self.e;
        if den.is_zero() {
            return Err(Error::SingularPoint);
        }
        let num = ((x + &self.a) * x + &self.b) * x + &self.c;
        Ok(num / den)
    }

    /// `x^3 + (a - d) x^2 + (b - e) x + c`.
    pub fn fixed_point_cubic(&self) -> Poly {
        Poly::new(vec![
            self.c.clone(),
            &self.b - &self.e,
            &self.a - &self.d,
            BigRational::one(),
        ])
    }

    pub fn fixed_point_structure(&self) -> FixedPointStructure {
        let three = BigRational::from_integer(3.into());
        let x0 = (&self.d - &self.a) / &three;
        if &three * &x0 * &x0 == &self.b - &self.e && &x0 * &x0 * &x0 == -&self.c {
            return FixedPointStructure::TripleRoot(x0);
        }
        let cubic = self.fixed_point_cubic();
        let g = cubic.gcd(&cubic.derivative());
        if g.degree() == Some(1) {
            // gcd = x - r with r the double root; roots sum to d - a
            let double = -g.coeff(0);
            let simple = (&self.d - &self.a) - &double - &double;
            return FixedPointStructure::DoubleAndSimple { double, simple };
        }
        match rational_roots(&cubic) {
            Some(roots) => {
                let residual = roots.iter().fold(cubic.clone(), |acc, r| {
                    acc.div_rem(&Poly::new(vec![-r, BigRational::one()])).0
                });
                let residual = (residual.degree().unwrap_or(0) > 0).then_some(residual);
                FixedPointStructure::ThreeDistinct { rational_roots: roots, residual }
            }
            None => FixedPointStructure::ThreeDistinct { rational_roots: Vec::new(), residual: Some(cubic) },
        }
    }

    /// Conjugate by `h(t) = t + x0` into canonical form.
    pub fn reduce_to_canonical(&self) -> Result<(PadicExact, Map31)> {
        let x0 = match self.fixed_point_structure() {
            FixedPointStructure::TripleRoot(x0) => x0,
            _ => return Err(Error::NotUniqueFixedPoint),
        };
        let big_a = self.d.clone();
        let big_b = &self.d * &x0 + &self.e;
        if big_a.is_zero() || big_b.is_zero() {
            return Err(Error::DegenerateAB);
        }
        let map = Map31::new(
            self.prime,
            PadicExact::new(big_a, self.prime),
            PadicExact::new(big_b, self.prime),
        )?;
        Ok((PadicExact::new(x0, self.prime), map))
    }

    /// Numerator and denominator of `h^{-1} o f o h` for `h(t) = t + x0`.
    pub fn translated(&self, x0: &BigRational) -> (Poly, Poly) {
        let h = Poly::new(vec![x0.clone(), BigRational::one()]);
        let num = Poly::new(vec![self.c.clone(), self.b.clone(), self.a.clone(), BigRational::one()]).compose(&h);
        let den = Poly::new(vec![self.e.clone(), self.d.clone()]).compose(&h);
        let shifted = &num - &den.scale(x0);
        (shifted, den)
    }
}

const SEARCH_LIMIT: u64 = 1 << 40;

/// All rational roots of a nonzero polynomial, with multiplicity collapsed.
/// `None` when the rational-root-theorem search would need to factor an
/// integer larger than 2^40.
pub fn rational_roots(poly: &Poly) -> Option<Vec<BigRational>> {
    let mut ints = poly.primitive_integer();
    let mut roots = Vec::new();
    if ints.is_empty() {
        return Some(roots);
    }
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
        while ints.first().is_some_and(|c| c.is_zero()) {
            ints.remove(0);
        }
    }
    if ints.len() <= 1 {
        return Some(roots);
    }
    let c0 = ints[0].abs().to_u64().filter(|&v| v <= SEARCH_LIMIT)?;
    let lead = ints.last().unwrap().abs().to_u64().filter(|&v| v <= SEARCH_LIMIT)?;
    let int_poly = Poly::new(ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    for num in divisors(c0) {
        for den in divisors(lead) {
            if BigInt::from(num).gcd(&BigInt::from(den)) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(num) * sign, BigInt::from(den));
                if int_poly.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn general(cs: [i64; 5]) -> Map31General {
        let p = Prime::new(2).unwrap();
        Map31General::new(p, q(cs[0]), q(cs[1]), q(cs[2]), q(cs[3]), q(cs[4])).unwrap()
    }

    #[test]
    fn canonical_input_is_triple_root_at_zero() {
        let m = general([3, 5, 0, 3, 5]);
        assert_eq!(m.fixed_point_structure(), FixedPointStructure::TripleRoot(q(0)));
        let (x0, c) = m.reduce_to_canonical().unwrap();
        assert!(x0.is_zero());
        assert_eq!((c.a().value(), c.b().value()), (&q(3), &q(5)));
    }

    #[test]
    fn shifted_triple_root() {
        let m = general([-5, 11, -8, 1, -1]);
        assert_eq!(m.fixed_point_structure(), FixedPointStructure::TripleRoot(q(2)));
        let (x0, c) = m.reduce_to_canonical().unwrap();
        assert_eq!(x0.value(), &q(2));
        assert_eq!((c.a().value(), c.b().value()), (&q(1), &q(1)));
        // conjugated map equals (t^3 + t^2 + t) / (t + 1)
        let (num, den) = m.translated(&q(2));
        assert_eq!(num, Poly::from_ints(&[0, 1, 1, 1]));
        assert_eq!(den, Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn three_distinct_rational_roots() {
        let m = general([1, 0, 0, 1, 1]);
        assert_eq!(
            m.fixed_point_structure(),
            FixedPointStructure::ThreeDistinct { rational_roots: vec![q(-1), q(0), q(1)], residual: None }
        );
        assert_eq!(m.reduce_to_canonical().unwrap_err(), Error::NotUniqueFixedPoint);
    }

    #[test]
    fn double_root_detected() {
        // cubic (x-1)^2 (x+2) = x^3 - 3x + 2: a - d = 0, b - e = -3, c = 2
        let m = general([1, -2, 2, 1, 1]);
        assert_eq!(
            m.fixed_point_structure(),
            FixedPointStructure::DoubleAndSimple { double: q(1), simple: q(-2) }
        );
    }

    #[test]
    fn irrational_roots_reported_by_factor() {
        // x^3 - 2x = x (x^2 - 2)
        let m = general([1, -1, 0, 1, 1]);
        match m.fixed_point_structure() {
            FixedPointStructure::ThreeDistinct { rational_roots, residual } => {
                assert_eq!(rational_roots, vec![q(0)]);
                assert_eq!(residual.unwrap(), Poly::from_ints(&[-2, 0, 1]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_canonical_pair() {
        // triple root at 0 with e = 0 gives B = 0
        let m = general([2, 0, 0, 2, 0]);
        assert_eq!(m.reduce_to_canonical().unwrap_err(), Error::DegenerateAB);
    }

    #[test]
    fn zero_d_rejected() {
        let p = Prime::new(3).unwrap();
        assert_eq!(
            Map31General::new(p, q(1), q(1), q(0), q(0), q(1)).unwrap_err(),
            Error::ZeroLeadingDenominator
        );
    }
}
