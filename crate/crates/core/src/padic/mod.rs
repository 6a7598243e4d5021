//! Exact arithmetic in Q_p over rational inputs.

mod approx;
mod ball;
mod exact;
pub mod literal;
pub(crate) mod modular;
mod newton;
mod norm;
mod prime;
mod sqrt;

pub use approx::{approx_of, digit_expand, PadicApprox};
pub use ball::{Ball, BallKind};
pub use exact::{height_bits, norm_of, p_power, valuation_of, ArithOp, PadicExact};
pub use newton::{root_norms_newton, RootNorms};
pub use norm::{NormExp, Valuation};
pub use prime::{is_prime_u64, Prime};
pub use sqrt::{exact_rational_sqrt, has_sqrt_qp, sqrt_qp, SquareRoot};

pub(crate) use norm::require_integral;
