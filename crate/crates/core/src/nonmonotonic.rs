//! Nonmonotonic entailment from the likelihood relation: in context `a`,
//! conclude `b` when `a and b` is strictly more likely than `a and not b`.
//! Includes the accepted-proposition sets and exhaustive checkers for the
//! preferential-inference rules plus rational monotony.

use std::fmt;

use crate::comparison::Comparison;
use crate::error::{Error, Result};
use crate::likelihood::likelihood_compare;
use crate::ordinal::{all_events_canonical, Event};
use crate::uncertainty::PossibilityProfile;

/// Whether `a` nonmonotonically entails `b`: the part of `a` where `b`
/// holds is strictly more likely than the part where it fails.
pub fn nm_entails(profile: &PossibilityProfile, a: &Event, b: &Event) -> Result<bool> {
    let with = a.intersection(b);
    let without = a.difference(b);
    let verdict = likelihood_compare(profile, &with, &without)?;
    // the two parts are disjoint, so the likelihood verdict is just the
    // possibility comparison of the parts
    debug_assert_eq!(
        verdict,
        profile.compare_possibility(&with, &without).unwrap()
    );
    Ok(verdict == Comparison::Greater)
}

/// Every event entailed in context `a`, in canonical event order. The
/// context must not be null: nothing is accepted on the strength of an
/// impossible context.
pub fn accepted_set(profile: &PossibilityProfile, a: &Event) -> Result<Vec<Event>> {
    if profile.is_null_event(a)? {
        return Err(Error::NullConditioningEvent);
    }
    let mut out = Vec::new();
    for b in all_events_canonical(profile.space()) {
        if nm_entails(profile, a, &b)? {
            out.push(b);
        }
    }
    Ok(out)
}

/// The inference rules checked by [`check_rule`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Restricted reflexivity: a non-null context entails itself.
    RestrictedReflexivity,
    /// Conjoin two conclusions drawn in the same context.
    And,
    /// A conclusion drawn in two contexts holds in their union.
    Or,
    /// Weaken a conclusion to any superset.
    RightWeakening,
    /// Strengthen the context with another conclusion.
    CautiousMonotony,
    /// Drop an intermediate conclusion from the context.
    Cut,
    /// Strengthen the context with anything not entailed to fail.
    RationalMonotony,
}

impl Rule {
    pub const ALL: [Rule; 7] = [
        Rule::RestrictedReflexivity,
        Rule::And,
        Rule::Or,
        Rule::RightWeakening,
        Rule::CautiousMonotony,
        Rule::Cut,
        Rule::RationalMonotony,
    ];

    /// Short code used on the command line: RR, AND, OR, RW, CM, CUT, RM.
    pub fn code(self) -> &'static str {
        match self {
            Rule::RestrictedReflexivity => "RR",
            Rule::And => "AND",
            Rule::Or => "OR",
            Rule::RightWeakening => "RW",
            Rule::CautiousMonotony => "CM",
            Rule::Cut => "CUT",
            Rule::RationalMonotony => "RM",
        }
    }

    pub fn from_code(code: &str) -> Option<Rule> {
        Rule::ALL
            .into_iter()
            .find(|r| r.code().eq_ignore_ascii_case(code))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Outcome of checking one rule over every event instance of a profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleOutcome {
    HoldsOnAllInstances {
        instances: u64,
    },
    Counterexample {
        a: Event,
        b: Event,
        c: Option<Event>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleVerdict {
    pub rule: Rule,
    pub outcome: RuleOutcome,
}

impl RuleVerdict {
    /// Re-evaluate a reported counterexample against the rule's defining
    /// inequalities. Holds-verdicts re-verify trivially.
    pub fn reverify(&self, profile: &PossibilityProfile) -> Result<bool> {
        match &self.outcome {
            RuleOutcome::HoldsOnAllInstances { .. } => Ok(true),
            RuleOutcome::Counterexample { a, b, c } => {
                let inst = rule_instance(profile, self.rule, a, b, c.as_ref())?;
                Ok(matches!(inst, Some(false)))
            }
        }
    }
}

/// Evaluate one rule on one instance. `None` means the hypothesis does not
/// apply; `Some(holds)` reports whether the conclusion follows.
fn rule_instance(
    profile: &PossibilityProfile,
    rule: Rule,
    a: &Event,
    b: &Event,
    c: Option<&Event>,
) -> Result<Option<bool>> {
    let entails = |x: &Event, y: &Event| nm_entails(profile, x, y);
    Ok(match rule {
        Rule::RestrictedReflexivity => {
            if profile.possibility_of(a)? > 0 {
                Some(entails(a, a)?)
            } else {
                None
            }
        }
        Rule::And => {
            let c = c.expect("AND is a three-event rule");
            if entails(a, b)? && entails(a, c)? {
                // conclusion: within a, b-and-c beats not-(b-and-c)
                Some(entails(a, &b.intersection(c))?)
            } else {
                None
            }
        }
        Rule::Or => {
            let c = c.expect("OR is a three-event rule");
            if entails(a, c)? && entails(b, c)? {
                Some(entails(&a.union(b), c)?)
            } else {
                None
            }
        }
        Rule::RightWeakening => {
            let c = c.expect("RW is a three-event rule");
            if b.is_subset_of(c) && entails(a, b)? {
                Some(entails(a, c)?)
            } else {
                None
            }
        }
        Rule::CautiousMonotony => {
            let c = c.expect("CM is a three-event rule");
            if entails(a, b)? && entails(a, c)? {
                Some(entails(&a.intersection(b), c)?)
            } else {
                None
            }
        }
        Rule::Cut => {
            let c = c.expect("CUT is a three-event rule");
            if entails(a, b)? && entails(&a.intersection(b), c)? {
                Some(entails(a, c)?)
            } else {
                None
            }
        }
        Rule::RationalMonotony => {
            let c = c.expect("RM is a three-event rule");
            // hypothesis: a entails b, and a does not entail not-c
            if entails(a, b)? && !entails(a, &c.complement())? {
                Some(entails(&a.intersection(c), b)?)
            } else {
                None
            }
        }
    })
}

fn rule_arity(rule: Rule) -> usize {
    match rule {
        Rule::RestrictedReflexivity => 1,
        _ => 3,
    }
}

/// Check one rule over every event instance of the profile's space, in
/// canonical order. Returns the first counterexample, if any.
pub fn check_rule(profile: &PossibilityProfile, rule: Rule) -> RuleVerdict {
    let events = all_events_canonical(profile.space());
    let mut instances = 0u64;
    match rule_arity(rule) {
        1 => {
            for a in &events {
                instances += 1;
                if let Some(false) =
                    rule_instance(profile, rule, a, a, None).expect("same-space events")
                {
                    return RuleVerdict {
                        rule,
                        outcome: RuleOutcome::Counterexample {
                            a: a.clone(),
                            b: a.clone(),
                            c: None,
                        },
                    };
                }
            }
        }
        _ => {
            for a in &events {
                for b in &events {
                    for c in &events {
                        instances += 1;
                        if let Some(false) =
                            rule_instance(profile, rule, a, b, Some(c)).expect("same-space events")
                        {
                            return RuleVerdict {
                                rule,
                                outcome: RuleOutcome::Counterexample {
                                    a: a.clone(),
                                    b: b.clone(),
                                    c: Some(c.clone()),
                                },
                            };
                        }
                    }
                }
            }
        }
    }
    RuleVerdict {
        rule,
        outcome: RuleOutcome::HoldsOnAllInstances { instances },
    }
}

/// Self-test of the bridge between the likelihood relation and entailment:
/// `a` strictly beats `b` exactly when the symmetric difference of `a` and
/// `b` entails `not-b or a`. Returns whether the two sides agree; they
/// always do.
pub fn likelihood_from_nm_duality(
    profile: &PossibilityProfile,
    a: &Event,
    b: &Event,
) -> Result<bool> {
    let strict = likelihood_compare(profile, a, b)? == Comparison::Greater;
    let context = a.symmetric_difference(b);
    let conclusion = b.complement().union(a);
    let entailed = nm_entails(profile, &context, &conclusion)?;
    Ok(strict == entailed)
}
