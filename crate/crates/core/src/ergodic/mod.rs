//! Ergodicity of `f` on invariant spheres under normalized Haar measure.

mod measure;
mod mod4;
mod probe;
mod verdict;

pub use measure::{haar_measure, invariant_radius_set, InvariantRadiusSet, InvariantSetKind};
pub use mod4::{clear_to_integral, mod4_for_scaling, mod4_profile, scale_conjugate, Mod4Profile};
pub use probe::{equidistribution_probe, FrequencyRow, FrequencyTable};
pub use verdict::{
    cell_cycle, ergodicity_verdict, splitting_verdict, half_beta_verdict, ErgodicityVerdict, NonErgodicReason,
    Witness, WitnessKind, MAX_WITNESS_DEPTH,
};
