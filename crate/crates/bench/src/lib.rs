//! Benchmark-only crate; see `benches/engine.rs`.
//!
//! Shared setup helpers for the benchmark targets live here so the bench
//! file stays focused on measurements.

use ordec_core::ordinal::StateSpace;
use ordec_core::PossibilityProfile;

/// A four-state space with a mildly uneven plausibility profile, the kind
/// of model the exhaustive sweeps spend most of their time on.
pub fn four_state_profile() -> (StateSpace, PossibilityProfile) {
    let space = StateSpace::new(["s1", "s2", "s3", "s4"]).expect("valid space");
    let profile = PossibilityProfile::new(&space, vec![3, 2, 2, 1]).expect("non-trivial");
    (space, profile)
}
