use thiserror::Error;

/// Why a rational has no square root in Q_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoRootReason {
    OddValuation,
    /// p odd and the unit part is not a quadratic residue mod p.
    NonResidue,
    /// p = 2 and the unit part is not congruent to 1 mod 8.
    NotOneModEight,
}

impl std::fmt::Display for NoRootReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NoRootReason::OddValuation => write!(f, "odd valuation"),
            NoRootReason::NonResidue => write!(f, "unit part is a non-residue mod p"),
            NoRootReason::NotOneModEight => write!(f, "unit part is not 1 mod 8"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands carry different primes ({0} and {1})")]
    PrimeMismatch(u64, u64),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("no square root in Q_p: {0}")]
    NoRootInQp(NoRootReason),
    #[error("coefficient b must be nonzero")]
    ZeroB,
    #[error("value is indistinguishable from zero at the tracked precision")]
    InsufficientPrecision,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("coefficient d must be nonzero")]
    ZeroLeadingDenominator,
    #[error("map does not have a unique (triple) fixed point")]
    NotUniqueFixedPoint,
    #[error("canonical coefficients satisfy a*b = 0")]
    DegenerateAB,
    #[error("point is the pole x_hat of the map")]
    SingularPoint,
    #[error("radius is critical for the radius map; supply a point")]
    CriticalRadius,
    #[error("point does not lie on a critical sphere")]
    NotCriticalSphere,
    #[error("operation does not apply to this radius-map case")]
    WrongCase,
    #[error("radius is not an invariant radius")]
    NotInvariantRadius,
    #[error("radius is not an integral power of p")]
    NonIntegralRadius,
    #[error("ball is not contained in the sphere")]
    BallNotInSphere,
    #[error("polynomial pair does not map 1+2Z_2 into itself")]
    NotSelfMap,
    #[error("operation requires p = 2 and distinct root norms")]
    WrongPrimeOrCase,
    #[error("parameter q is excluded (pole or zero of a*b)")]
    ExcludedQ,
    #[error("points do not form a 2-periodic pair")]
    NotPeriodicPair,
    #[error("radius exponent does not fit in 64-bit arithmetic")]
    ExponentOverflow,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
