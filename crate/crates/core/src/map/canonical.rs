//! The canonical map `f(x) = (x^3 + a x^2 + b x) / (a x + b)`, `ab != 0`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::padic::{approx_of, norm_of, root_norms_newton, NormExp, PadicApprox, PadicExact, Prime};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Map31 {
    a: PadicExact,
    b: PadicExact,
    prime: Prime,
    alpha: NormExp,
    beta: NormExp,
    delta: NormExp,
    x_hat: PadicExact,
    disc: PadicExact,
}

impl Map31 {
    pub fn new(prime: Prime, a: PadicExact, b: PadicExact) -> Result<Self> {
        if a.prime() != prime || b.prime() != prime {
            return Err(Error::PrimeMismatch(prime.get(), if a.prime() != prime { a.prime() } else { b.prime() }.get()));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::DegenerateAB);
        }
        let norms = root_norms_newton(&a, &b)?;
        let av = a.value();
        let bv = b.value();
        let x_hat = PadicExact::new(-bv / av, prime);
        let disc = PadicExact::new(av * av - BigRational::from_integer(4.into()) * bv, prime);
        Ok(Map31 {
            delta: a.norm(),
            alpha: norms.alpha,
            beta: norms.beta,
            a,
            b,
            prime,
            x_hat,
            disc,
        })
    }

    /// Convenience constructor from rational literals.
    pub fn parse(p: u64, a: &str, b: &str) -> Result<Self> {
        let prime = Prime::new(p)?;
        Self::new(prime, PadicExact::parse(a, prime)?, PadicExact::parse(b, prime)?)
    }

    pub fn a(&self) -> &PadicExact {
        &self.a
    }
    pub fn b(&self) -> &PadicExact {
        &self.b
    }
    pub fn prime(&self) -> Prime {
        self.prime
    }
    /// Smaller root norm of `x^2 + a x + b`.
    pub fn alpha(&self) -> NormExp {
        self.alpha
    }
    /// Larger root norm.
    pub fn beta(&self) -> NormExp {
        self.beta
    }
    /// `|a|_p`.
    pub fn delta(&self) -> NormExp {
        self.delta
    }
    /// The pole `-b/a`.
    pub fn x_hat(&self) -> &PadicExact {
        &self.x_hat
    }
    /// `a^2 - 4b`.
    pub fn disc(&self) -> &PadicExact {
        &self.disc
    }

    pub fn point(&self, x: BigRational) -> PadicExact {
        PadicExact::new(x, self.prime)
    }

    fn denominator(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.a.value() * x + self.b.value();
        if d.is_zero() {
            Err(Error::SingularPoint)
        } else {
            Ok(d)
        }
    }

    fn check(&self, x: &PadicExact) -> Result<()> {
        if x.prime() != self.prime {
            return Err(Error::PrimeMismatch(self.prime.get(), x.prime().get()));
        }
        Ok(())
    }

    /// `x^2 + a x + b`.
    fn quadratic(&self, x: &BigRational) -> BigRational {
        (x + self.a.value()) * x + self.b.value()
    }

    pub fn eval_value(&self, x: &BigRational) -> Result<BigRational> {
        // Clear denominators first so the result is reduced once; orbits
        // triple the height of x every step and gcds dominate the cost.
        let (n, d) = (x.numer(), x.denom());
        let (an, ad) = (self.a.value().numer(), self.a.value().denom());
        let (bn, bd) = (self.b.value().numer(), self.b.value().denom());
        let lin = an * bd * n + bn * ad * d;
        if lin.is_zero() {
            return Err(Error::SingularPoint);
        }
        let quad = (n * n * ad + an * n * d) * bd + bn * ad * d * d;
        Ok(BigRational::new(n * quad, d * d * lin))
    }

    pub fn eval(&self, x: &PadicExact) -> Result<PadicExact> {
        self.check(x)?;
        Ok(PadicExact::new(self.eval_value(x.value())?, self.prime))
    }

    /// `|f(x)|` as `|x| |x^2 + a x + b| / |a x + b|`.
    pub fn norm_f(&self, x: &PadicExact) -> Result<NormExp> {
        self.check(x)?;
        let den = self.denominator(x.value())?;
        let p = self.prime;
        Ok(x.norm() * norm_of(&self.quadratic(x.value()), p) / norm_of(&den, p))
    }

    /// Exact `f'(x) = (2a x^3 + (3b + a^2) x^2 + 2ab x + b^2) / (a x + b)^2`.
    pub fn f_prime(&self, x: &PadicExact) -> Result<PadicExact> {
        self.check(x)?;
        let den = self.denominator(x.value())?;
        let (a, b, x) = (self.a.value(), self.b.value(), x.value());
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let num = &two * a * x * x * x + (&three * b + a * a) * x * x + &two * a * b * x + b * b;
        Ok(PadicExact::new(num / (&den * &den), self.prime))
    }

    pub fn f_prime_norm(&self, x: &PadicExact) -> Result<NormExp> {
        Ok(self.f_prime(x)?.norm())
    }

    /// `f` on a truncated expansion. `a` and `b` are expanded 16 digits past the input precision.
    pub fn eval_approx(&self, x: &PadicApprox) -> Result<PadicApprox> {
        let n = x.precision() + 16;
        let a = approx_of(&self.a, n);
        let b = approx_of(&self.b, n);
        let den = a.mul(x)?.add(&b)?;
        if den.is_indistinguishable_from_zero() {
            return Err(Error::InsufficientPrecision);
        }
        let quad = x.add(&a)?.mul(x)?.add(&b)?;
        x.mul(&quad)?.div(&den)
    }

    /// Numerator and denominator of `f` as polynomials.
    pub fn polys(&self) -> (Poly, Poly) {
        let (a, b) = (self.a.value().clone(), self.b.value().clone());
        (
            Poly::new(vec![BigRational::zero(), b.clone(), a.clone(), num_traits::One::one()]),
            Poly::new(vec![b, a]),
        )
    }
}
