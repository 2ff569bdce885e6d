//! Deterministic searches for the negative results: instances where an
//! expected failure actually occurs. The scan follows canonical order and
//! returns the first witness, or an exhaustion notice.

use super::enumerate::{all_acts, profiles, scales_distinct_ranks, spaces_up_to, weight_vectors};
use super::{
    describe_act, describe_profile, describe_scale, Budget, CheckOutcome, CheckReport, Claim,
    SearchBounds, Witness,
};
use crate::comparison::Comparison;
use crate::error::Result;
use crate::lifting::lift_compare;
use crate::likelihood::likelihood_compare;
use crate::ordinal::all_events_canonical;
use crate::uncertainty::{UncertaintyComparator, WeightProfile};

/// The named searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchProperty {
    /// Three acts whose weight-sum lifted preferences cycle strictly.
    QualprobStrictCycle,
    /// Acts f ~ g, g ~ h with f and h not indifferent, under a lifted
    /// necessity ordering.
    ActIndifferenceIntransitivity,
    /// Events A ~ B, B ~ C with A and C not indifferent, under the
    /// likelihood relation.
    EventIndifferenceIntransitivity,
    /// A pair with equal necessity but a strict likelihood verdict.
    LikelihoodStrictlyRefinesNecessity,
    /// A pair with equal possibility but a strict likelihood verdict.
    LikelihoodStrictlyRefinesPossibility,
}

impl SearchProperty {
    pub const ALL: [SearchProperty; 5] = [
        SearchProperty::QualprobStrictCycle,
        SearchProperty::ActIndifferenceIntransitivity,
        SearchProperty::EventIndifferenceIntransitivity,
        SearchProperty::LikelihoodStrictlyRefinesNecessity,
        SearchProperty::LikelihoodStrictlyRefinesPossibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchProperty::QualprobStrictCycle => "qualprob-strict-cycle",
            SearchProperty::ActIndifferenceIntransitivity => "act-indifference-intransitivity",
            SearchProperty::EventIndifferenceIntransitivity => "event-indifference-intransitivity",
            SearchProperty::LikelihoodStrictlyRefinesNecessity => "likelihood-strictly-refines-N",
            SearchProperty::LikelihoodStrictlyRefinesPossibility => {
                "likelihood-strictly-refines-Pi"
            }
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        SearchProperty::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(name))
    }
}

/// Scan for the first witness of the property within bounds.
pub fn search_counterexample(
    property: SearchProperty,
    bounds: &SearchBounds,
) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    let witness = match property {
        SearchProperty::QualprobStrictCycle => search_qualprob_cycle(bounds, &mut budget)?,
        SearchProperty::ActIndifferenceIntransitivity => {
            search_act_indifference(bounds, &mut budget)?
        }
        SearchProperty::EventIndifferenceIntransitivity => {
            search_event_indifference(bounds, &mut budget)?
        }
        SearchProperty::LikelihoodStrictlyRefinesNecessity => {
            search_strict_refinement(bounds, &mut budget, true)?
        }
        SearchProperty::LikelihoodStrictlyRefinesPossibility => {
            search_strict_refinement(bounds, &mut budget, false)?
        }
    };
    Ok(CheckReport {
        property: format!("search {}", property.name()),
        bounds: *bounds,
        instances: budget.used(),
        outcome: match witness {
            Some(w) => CheckOutcome::WitnessFound(w),
            None => CheckOutcome::Exhausted,
        },
    })
}

fn search_qualprob_cycle(bounds: &SearchBounds, budget: &mut Budget) -> Result<Option<Witness>> {
    // tuple size is fixed by the property: a cycle needs three acts
    if bounds.max_acts < 3 {
        return Ok(None);
    }
    for space in spaces_up_to(bounds.max_states) {
        for weights in weight_vectors(space.len(), 2) {
            let wp = WeightProfile::from_integers(&space, &weights)?;
            let cmp = UncertaintyComparator::QualitativeProbability(wp);
            for scale in scales_distinct_ranks(bounds.max_ranks as usize) {
                let acts = all_acts(&space, &scale);
                for f in &acts {
                    for g in &acts {
                        budget.charge(acts.len() as u64)?;
                        if lift_compare(&cmp, f, g)? != Comparison::Greater {
                            continue;
                        }
                        for h in &acts {
                            if lift_compare(&cmp, g, h)? == Comparison::Greater
                                && lift_compare(&cmp, h, f)? == Comparison::Greater
                            {
                                let details = format!(
                                    "strict preference cycle under weight sums\nweights {:?} over {}\n{}\n{}\n{}\nf > g, g > h, h > f",
                                    weights,
                                    describe_scale(&scale),
                                    describe_act("f", f),
                                    describe_act("g", g),
                                    describe_act("h", h),
                                );
                                let claim = |x: &crate::ordinal::Act, y: &crate::ordinal::Act| {
                                    Claim::Lift {
                                        cmp: cmp.clone(),
                                        f: x.clone(),
                                        g: y.clone(),
                                        allowed: vec![Comparison::Greater],
                                    }
                                };
                                return Ok(Some(Witness {
                                    details,
                                    claims: vec![claim(f, g), claim(g, h), claim(h, f)],
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn search_act_indifference(bounds: &SearchBounds, budget: &mut Budget) -> Result<Option<Witness>> {
    if bounds.max_acts < 3 {
        return Ok(None);
    }
    for space in spaces_up_to(bounds.max_states) {
        for scale in scales_distinct_ranks(bounds.max_ranks as usize) {
            let acts = all_acts(&space, &scale);
            for profile in profiles(&space, bounds.max_levels) {
                let cmp = UncertaintyComparator::Necessity(profile.clone());
                for f in &acts {
                    for g in &acts {
                        budget.charge(acts.len() as u64)?;
                        if lift_compare(&cmp, f, g)? != Comparison::Equivalent {
                            continue;
                        }
                        for h in &acts {
                            if lift_compare(&cmp, g, h)? == Comparison::Equivalent
                                && lift_compare(&cmp, f, h)? != Comparison::Equivalent
                            {
                                let details = format!(
                                    "act indifference is not transitive\n{}\n{}\n{}\n{}\n{}\nf ~ g, g ~ h, f {} h",
                                    describe_profile(&profile),
                                    describe_scale(&scale),
                                    describe_act("f", f),
                                    describe_act("g", g),
                                    describe_act("h", h),
                                    lift_compare(&cmp, f, h)?.symbol(),
                                );
                                return Ok(Some(Witness {
                                    details,
                                    claims: vec![
                                        Claim::Lift {
                                            cmp: cmp.clone(),
                                            f: f.clone(),
                                            g: g.clone(),
                                            allowed: vec![Comparison::Equivalent],
                                        },
                                        Claim::Lift {
                                            cmp: cmp.clone(),
                                            f: g.clone(),
                                            g: h.clone(),
                                            allowed: vec![Comparison::Equivalent],
                                        },
                                        Claim::Lift {
                                            cmp: cmp.clone(),
                                            f: f.clone(),
                                            g: h.clone(),
                                            allowed: vec![Comparison::Less, Comparison::Greater],
                                        },
                                    ],
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn search_event_indifference(
    bounds: &SearchBounds,
    budget: &mut Budget,
) -> Result<Option<Witness>> {
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for profile in profiles(&space, bounds.max_levels) {
            for a in &events {
                for b in &events {
                    budget.charge(events.len() as u64)?;
                    if likelihood_compare(&profile, a, b)? != Comparison::Equivalent {
                        continue;
                    }
                    for c in &events {
                        if likelihood_compare(&profile, b, c)? == Comparison::Equivalent
                            && likelihood_compare(&profile, a, c)? != Comparison::Equivalent
                        {
                            let details = format!(
                                "event indifference is not transitive\n{}\nA = {a}, B = {b}, C = {c}\nA ~ B, B ~ C, A {} C",
                                describe_profile(&profile),
                                likelihood_compare(&profile, a, c)?.symbol(),
                            );
                            let claim =
                                |x: &crate::ordinal::Event,
                                 y: &crate::ordinal::Event,
                                 allowed: Vec<Comparison>| {
                                    Claim::Likelihood {
                                        profile: profile.clone(),
                                        a: x.clone(),
                                        b: y.clone(),
                                        allowed,
                                    }
                                };
                            return Ok(Some(Witness {
                                details,
                                claims: vec![
                                    claim(a, b, vec![Comparison::Equivalent]),
                                    claim(b, c, vec![Comparison::Equivalent]),
                                    claim(a, c, vec![Comparison::Less, Comparison::Greater]),
                                ],
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn search_strict_refinement(
    bounds: &SearchBounds,
    budget: &mut Budget,
    necessity: bool,
) -> Result<Option<Witness>> {
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for profile in profiles(&space, bounds.max_levels) {
            budget.charge((events.len() * events.len()) as u64)?;
            for a in &events {
                for b in &events {
                    let coarse = if necessity {
                        profile.compare_necessity(a, b)?
                    } else {
                        profile.compare_possibility(a, b)?
                    };
                    if coarse == Comparison::Equivalent
                        && likelihood_compare(&profile, a, b)? == Comparison::Greater
                    {
                        let kind = if necessity {
                            "necessity"
                        } else {
                            "possibility"
                        };
                        let cmp = if necessity {
                            UncertaintyComparator::Necessity(profile.clone())
                        } else {
                            UncertaintyComparator::Possibility(profile.clone())
                        };
                        let details = format!(
                            "likelihood strictly refines the {kind} ordering\n{}\nA = {a}, B = {b}: {kind} ties, likelihood says >",
                            describe_profile(&profile),
                        );
                        return Ok(Some(Witness {
                            details,
                            claims: vec![
                                Claim::Comparator {
                                    cmp,
                                    a: a.clone(),
                                    b: b.clone(),
                                    allowed: vec![Comparison::Equivalent],
                                },
                                Claim::Likelihood {
                                    profile: profile.clone(),
                                    a: a.clone(),
                                    b: b.clone(),
                                    allowed: vec![Comparison::Greater],
                                },
                            ],
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}
