//! Dynamics on spheres `S_r(0)` around the fixed point.

mod critical;
mod local;
mod orbit;
mod radius;

pub use critical::{critical_sphere_image, CriticalVerdict};
pub use local::{
    cell_unit, digit_preservation_index, local_isometry_check, minimal_invariant_ball, rho, rho_chain,
    sphere_partition, DigitPreservation, MinimalBall, MAX_CELLS,
};
pub use orbit::{orbit_csv, run_orbit, OrbitOptions, OrbitStep, OrbitTerminal, OrbitTrace};
pub use radius::{
    apply_radius_map, classify_sphere, is_invariant_radius, preimage_radius_ladder, radius_map_kind,
    zeta_threshold, LadderRung, RadiusMapKind, SphereClass,
};
