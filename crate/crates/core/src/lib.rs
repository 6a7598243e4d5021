//! Exact p-adic dynamics of (3,1)-rational maps with a unique fixed point.
//!
//! Every map with a triple fixed point is conjugate to
//! `f(x) = (x^3 + a x^2 + b x) / (a x + b)` with `ab != 0`. The crate works
//! with rational `a`, `b` and rational points, so every norm, orbit and
//! certificate is computed exactly.

pub mod error;
pub mod padic;
pub mod poly;
pub mod map;
pub mod sphere;
pub mod ergodic;
pub mod periodic;
pub mod report;

pub use error::{Error, Result};
