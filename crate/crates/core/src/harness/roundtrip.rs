//! Representation round-trip: from the lifted act relation alone, recover
//! the state ordering (through two-consequence acts) and the consequence
//! ordering (through constant acts), rebuild a profile and scale from the
//! extracted data, lift again, and demand verdict-for-verdict equality.

use super::enumerate::{all_acts, profiles, scales_with_ties, spaces_up_to};
use super::{
    describe_profile, describe_scale, Budget, CheckOutcome, CheckReport, Claim, SearchBounds,
    Witness,
};
use crate::comparison::Comparison;
use crate::error::Result;
use crate::lifting::lift_compare;
use crate::ordinal::{Act, OutcomeScale, StateSpace};
use crate::uncertainty::{PossibilityProfile, UncertaintyComparator};

/// Everything recovered from one lifted relation.
pub struct ExtractedModel {
    pub profile: PossibilityProfile,
    pub scale: OutcomeScale,
}

/// Recover a profile and scale from the lifted relation of the given
/// comparator, querying it only through public comparisons on constant and
/// two-consequence acts.
pub fn extract_model(
    space: &StateSpace,
    scale: &OutcomeScale,
    cmp: &UncertaintyComparator,
) -> Result<ExtractedModel> {
    // consequence order from constant acts: rank by how many consequences
    // each one strictly beats (a monotone image of the underlying ranks)
    let constants: Vec<Act> = (0..scale.len())
        .map(|i| Act::constant(space, scale, scale.name(i)))
        .collect::<Result<_>>()?;
    let mut extracted_ranks = vec![0u32; scale.len()];
    for (c, fc) in constants.iter().enumerate() {
        for fd in &constants {
            if lift_compare(cmp, fc, fd)? == Comparison::Greater {
                extracted_ranks[c] += 1;
            }
        }
    }
    let extracted_scale = OutcomeScale::new(
        (0..scale.len()).map(|i| (scale.name(i).to_string(), extracted_ranks[i])),
    )?;

    // a strictly ranked consequence pair, chosen by the extracted order
    let hi = (0..scale.len())
        .max_by_key(|&c| extracted_ranks[c])
        .expect("scale is nonempty");
    let lo = (0..scale.len())
        .min_by_key(|&c| extracted_ranks[c])
        .expect("scale is nonempty");
    let best = scale.name(hi);
    let worse = scale.name(lo);

    // state ordering from two-consequence acts over singletons; a state is
    // null when its singleton act ties the empty-event act
    let empty_act = Act::two_outcome(&space.empty_event(), scale, best, worse)?;
    let singleton_acts: Vec<Act> = (0..space.len())
        .map(|s| Act::two_outcome(&space.event_from_mask(1 << s), scale, best, worse))
        .collect::<Result<_>>()?;
    let mut null_state = vec![false; space.len()];
    for s in 0..space.len() {
        null_state[s] =
            lift_compare(cmp, &singleton_acts[s], &empty_act)? == Comparison::Equivalent;
    }
    let mut levels = vec![0u8; space.len()];
    for s in 0..space.len() {
        if null_state[s] {
            continue;
        }
        let mut level = 1u8;
        for t in 0..space.len() {
            if !null_state[t]
                && lift_compare(cmp, &singleton_acts[s], &singleton_acts[t])? == Comparison::Greater
            {
                level += 1;
            }
        }
        levels[s] = level;
    }
    let extracted_profile = PossibilityProfile::new(space, levels)?;
    Ok(ExtractedModel {
        profile: extracted_profile,
        scale: extracted_scale,
    })
}

fn rebuild_act(act: &Act, space: &StateSpace, scale: &OutcomeScale) -> Result<Act> {
    let image = (0..space.len())
        .map(|s| act.outcome_index(s) as u16)
        .collect();
    Act::from_outcome_indices(space, scale, image)
}

/// Round-trip one specific model and report the result.
pub fn check_roundtrip_on(
    space: &StateSpace,
    scale: &OutcomeScale,
    profile: &PossibilityProfile,
    bounds: &SearchBounds,
) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    let outcome = match roundtrip_once(space, scale, profile, &mut budget)? {
        Some(w) => CheckOutcome::Counterexample(w),
        None => CheckOutcome::Pass,
    };
    Ok(CheckReport {
        property: "representation-round-trip".into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome,
    })
}

/// Round-trip one model: lift, extract, relift, compare all act pairs.
/// Returns the first mismatch, if any.
pub(crate) fn roundtrip_once(
    space: &StateSpace,
    scale: &OutcomeScale,
    profile: &PossibilityProfile,
    budget: &mut Budget,
) -> Result<Option<Witness>> {
    let cmp = UncertaintyComparator::Necessity(profile.clone());
    let acts = all_acts(space, scale);
    budget.charge((acts.len() * acts.len()) as u64)?;
    let extracted = extract_model(space, scale, &cmp)?;
    let relift_cmp = UncertaintyComparator::Necessity(extracted.profile.clone());
    for f in &acts {
        for g in &acts {
            let original = lift_compare(&cmp, f, g)?;
            let f2 = rebuild_act(f, space, &extracted.scale)?;
            let g2 = rebuild_act(g, space, &extracted.scale)?;
            let relifted = lift_compare(&relift_cmp, &f2, &g2)?;
            if original != relifted {
                return Ok(Some(Witness {
                    details: format!(
                        "round-trip mismatch\noriginal {} with {}\nextracted {} with {}\nf = {f}\ng = {g}\noriginal verdict {original}, relifted verdict {relifted}",
                        describe_profile(profile),
                        describe_scale(scale),
                        describe_profile(&extracted.profile),
                        describe_scale(&extracted.scale),
                    ),
                    claims: vec![Claim::LiftVerdictsDiffer {
                        cmp1: cmp.clone(),
                        f1: f.clone(),
                        g1: g.clone(),
                        cmp2: relift_cmp.clone(),
                        f2,
                        g2,
                    }],
                }));
            }
        }
    }
    Ok(None)
}

/// Round-trip every profile and scale within bounds.
pub fn check_representation_roundtrip(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        for consequence_count in 2..=(bounds.max_ranks as usize) {
            for scale in scales_with_ties(consequence_count, bounds.max_ranks) {
                for profile in profiles(&space, bounds.max_levels) {
                    if let Some(w) = roundtrip_once(&space, &scale, &profile, &mut budget)? {
                        return Ok(CheckReport {
                            property: "representation-round-trip".into(),
                            bounds: *bounds,
                            instances: budget.used(),
                            outcome: CheckOutcome::Counterexample(w),
                        });
                    }
                }
            }
        }
    }
    Ok(CheckReport {
        property: "representation-round-trip".into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn omelette_round_trips_exactly() {
        let fx = fixtures::omelette();
        let mut budget = Budget::new(&SearchBounds {
            ceiling: 10_000_000,
            ..SearchBounds::default()
        })
        .unwrap();
        for profile in [
            fx.profile_fresh_likely(),
            fx.profile_rotten_likely(),
            fx.profile_equal(),
        ] {
            let mismatch = roundtrip_once(&fx.space, &fx.scale, &profile, &mut budget).unwrap();
            assert!(mismatch.is_none());
        }
    }

    #[test]
    fn extraction_recovers_the_level_order() {
        let fx = fixtures::omelette();
        let profile = fx.profile_fresh_likely();
        let cmp = UncertaintyComparator::Necessity(profile.clone());
        let extracted = extract_model(&fx.space, &fx.scale, &cmp).unwrap();
        // fresh strictly above rotten, nobody null
        assert!(extracted.profile.level(0) > extracted.profile.level(1));
        assert!(extracted.profile.level(1) > 0);
        // extracted ranks keep the original strict order
        for i in 0..fx.scale.len() {
            for j in 0..fx.scale.len() {
                assert_eq!(
                    fx.scale.rank(i) > fx.scale.rank(j),
                    extracted.scale.rank(i) > extracted.scale.rank(j)
                );
            }
        }
    }

    #[test]
    fn uniform_profile_round_trips() {
        let space = StateSpace::new(["a", "b", "c"]).unwrap();
        let scale = OutcomeScale::new([("x", 5), ("y", 2)]).unwrap();
        let profile = PossibilityProfile::new(&space, vec![2, 2, 2]).unwrap();
        let mut budget = Budget::new(&SearchBounds::default()).unwrap();
        assert!(roundtrip_once(&space, &scale, &profile, &mut budget)
            .unwrap()
            .is_none());
    }

    #[test]
    fn small_sweep_round_trips() {
        let bounds = SearchBounds {
            max_states: 2,
            max_levels: 2,
            max_ranks: 2,
            max_acts: 3,
            ceiling: 10_000_000,
        };
        let report = check_representation_roundtrip(&bounds).unwrap();
        assert!(report.passed(), "{report}");
    }
}
