//! (3,1)-rational maps: general form, fixed-point analysis and the canonical form.

mod canonical;
mod general;

pub use canonical::Map31;
pub use general::{rational_roots, FixedPointStructure, Map31General};
