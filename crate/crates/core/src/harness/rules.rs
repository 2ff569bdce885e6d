//! Sweeps of the preferential-inference rules and rational monotony over
//! every profile within bounds, plus deductive closure of the accepted
//! sets and the symmetric-difference bridge self-test.

use super::enumerate::{profiles, spaces_up_to};
use super::{describe_profile, Budget, CheckOutcome, CheckReport, Claim, SearchBounds, Witness};
use crate::error::Result;
use crate::nonmonotonic::{
    accepted_set, check_rule, likelihood_from_nm_duality, nm_entails, Rule, RuleOutcome,
};
use crate::ordinal::all_events_canonical;

/// Check one rule over every profile within bounds; one report.
pub fn check_system_p(rule: Rule, bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    let property = format!("rule {}", rule.code());
    for space in spaces_up_to(bounds.max_states) {
        let n_events = 1u64 << space.len();
        let cost = match rule {
            Rule::RestrictedReflexivity => n_events,
            _ => n_events * n_events * n_events,
        };
        for profile in profiles(&space, bounds.max_levels) {
            budget.charge(cost)?;
            let verdict = check_rule(&profile, rule);
            if let RuleOutcome::Counterexample { a, b, c } = &verdict.outcome {
                let mut details = format!(
                    "rule {} fails\n{}\nA = {a}, B = {b}",
                    rule.code(),
                    describe_profile(&profile)
                );
                if let Some(c) = c {
                    details.push_str(&format!(", C = {c}"));
                }
                let w = Witness {
                    details,
                    claims: vec![Claim::Rule {
                        profile: profile.clone(),
                        verdict: verdict.clone(),
                    }],
                };
                return Ok(CheckReport {
                    property,
                    bounds: *bounds,
                    instances: budget.used(),
                    outcome: CheckOutcome::Counterexample(w),
                });
            }
        }
    }
    Ok(CheckReport {
        property,
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

/// Accepted sets are deductively closed: closed under intersection and
/// under supersets, for every non-null context.
pub fn check_acceptance_closure(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for profile in profiles(&space, bounds.max_levels) {
            for context in &events {
                if profile.is_null_event(context)? {
                    continue;
                }
                let accepted = accepted_set(&profile, context)?;
                budget.charge(
                    (events.len() + accepted.len() * accepted.len() + accepted.len() * events.len())
                        as u64,
                )?;
                for b1 in &accepted {
                    for b2 in &accepted {
                        if !nm_entails(&profile, context, &b1.intersection(b2))? {
                            let w = Witness {
                                details: format!(
                                    "accepted set not closed under intersection\n{}\ncontext = {context}\nB1 = {b1}, B2 = {b2}",
                                    describe_profile(&profile)
                                ),
                                claims: vec![
                                    Claim::NmEntails {
                                        profile: profile.clone(),
                                        a: context.clone(),
                                        b: b1.clone(),
                                        expect: true,
                                    },
                                    Claim::NmEntails {
                                        profile: profile.clone(),
                                        a: context.clone(),
                                        b: b2.clone(),
                                        expect: true,
                                    },
                                    Claim::NmEntails {
                                        profile: profile.clone(),
                                        a: context.clone(),
                                        b: b1.intersection(b2),
                                        expect: false,
                                    },
                                ],
                            };
                            return Ok(CheckReport {
                                property: "acceptance-closure".into(),
                                bounds: *bounds,
                                instances: budget.used(),
                                outcome: CheckOutcome::Counterexample(w),
                            });
                        }
                    }
                    for sup in &events {
                        if b1.is_subset_of(sup) && !nm_entails(&profile, context, sup)? {
                            let w = Witness {
                                details: format!(
                                    "accepted set not closed under supersets\n{}\ncontext = {context}\nB = {b1}, superset = {sup}",
                                    describe_profile(&profile)
                                ),
                                claims: vec![
                                    Claim::NmEntails {
                                        profile: profile.clone(),
                                        a: context.clone(),
                                        b: b1.clone(),
                                        expect: true,
                                    },
                                    Claim::NmEntails {
                                        profile: profile.clone(),
                                        a: context.clone(),
                                        b: sup.clone(),
                                        expect: false,
                                    },
                                ],
                            };
                            return Ok(CheckReport {
                                property: "acceptance-closure".into(),
                                bounds: *bounds,
                                instances: budget.used(),
                                outcome: CheckOutcome::Counterexample(w),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(CheckReport {
        property: "acceptance-closure".into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

/// The bridge between the strict likelihood relation and entailment from
/// the symmetric difference holds on every pair.
pub fn check_duality_self_test(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for profile in profiles(&space, bounds.max_levels) {
            budget.charge((events.len() * events.len()) as u64)?;
            for a in &events {
                for b in &events {
                    if !likelihood_from_nm_duality(&profile, a, b)? {
                        let w = Witness {
                            details: format!(
                                "symmetric-difference bridge fails\n{}\nA = {a}, B = {b}",
                                describe_profile(&profile)
                            ),
                            claims: vec![Claim::Duality {
                                profile: profile.clone(),
                                a: a.clone(),
                                b: b.clone(),
                                expect: false,
                            }],
                        };
                        return Ok(CheckReport {
                            property: "symmetric-difference-bridge".into(),
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
        property: "symmetric-difference-bridge".into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

/// All seven rules, acceptance closure, and the bridge self-test.
pub fn system_p_suite(bounds: &SearchBounds) -> Result<Vec<CheckReport>> {
    let mut out = Vec::with_capacity(9);
    for rule in Rule::ALL {
        out.push(check_system_p(rule, bounds)?);
    }
    out.push(check_acceptance_closure(bounds)?);
    out.push(check_duality_self_test(bounds)?);
    Ok(out)
}

/// The same suite for one specific profile (for problems read from a file).
pub fn system_p_suite_on(
    profile: &crate::uncertainty::PossibilityProfile,
    bounds: &SearchBounds,
) -> Result<Vec<CheckReport>> {
    let mut out = Vec::with_capacity(9);
    let events = all_events_canonical(profile.space());
    let n_events = events.len() as u64;
    for rule in Rule::ALL {
        let mut budget = Budget::new(bounds)?;
        budget.charge(match rule {
            Rule::RestrictedReflexivity => n_events,
            _ => n_events * n_events * n_events,
        })?;
        let verdict = check_rule(profile, rule);
        let outcome = match &verdict.outcome {
            RuleOutcome::HoldsOnAllInstances { .. } => CheckOutcome::Pass,
            RuleOutcome::Counterexample { a, b, c } => {
                let mut details = format!(
                    "rule {} fails\n{}\nA = {a}, B = {b}",
                    rule.code(),
                    describe_profile(profile)
                );
                if let Some(c) = c {
                    details.push_str(&format!(", C = {c}"));
                }
                CheckOutcome::Counterexample(Witness {
                    details,
                    claims: vec![Claim::Rule {
                        profile: profile.clone(),
                        verdict: verdict.clone(),
                    }],
                })
            }
        };
        out.push(CheckReport {
            property: format!("rule {}", rule.code()),
            bounds: *bounds,
            instances: budget.used(),
            outcome,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SearchBounds {
        SearchBounds {
            max_states: 3,
            max_levels: 2,
            max_ranks: 2,
            max_acts: 3,
            ceiling: 10_000_000,
        }
    }

    #[test]
    fn rules_hold_on_small_bounds() {
        for rule in Rule::ALL {
            let report = check_system_p(rule, &small()).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn closure_and_bridge_hold_on_small_bounds() {
        assert!(check_acceptance_closure(&small()).unwrap().passed());
        assert!(check_duality_self_test(&small()).unwrap().passed());
    }
}
