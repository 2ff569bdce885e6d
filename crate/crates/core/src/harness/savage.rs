//! Sweeps for the classical act-preference postulates under the lifting
//! rule: order structure of the lifted relation (P1 without transitive
//! indifference), the sure-thing principle (P2), compatibility with
//! constant acts (P3), two-consequence act comparison (P4), unanimity,
//! and the agreement of the certainty-side and possibility-side forms.

use super::enumerate::{all_acts, profiles, scales_distinct_ranks, spaces_up_to, weight_vectors};
use super::{
    describe_act, describe_profile, describe_scale, Budget, CheckOutcome, CheckReport, Claim,
    SearchBounds, Witness,
};
use crate::comparison::Comparison;
use crate::error::Result;
use crate::lifting::{event_compare_via_acts, lift_compare, lift_compare_conditional};
use crate::likelihood::likelihood_compare;
use crate::ordinal::{all_events_canonical, Act, Event, OutcomeScale};
use crate::uncertainty::{PossibilityProfile, UncertaintyComparator, WeightProfile};

/// Which lifted relation a structural check runs against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftRule {
    /// Lift the necessity ordering of every profile within bounds.
    Necessity,
    /// Lift the weight-sum ordering of every small integer weight vector
    /// (entries 1 and 2) within bounds.
    QualitativeProbability,
}

const ALLOWED_WEAK: [Comparison; 2] = [Comparison::Greater, Comparison::Equivalent];

struct VerdictMatrix {
    n: usize,
    v: Vec<Comparison>,
}

impl VerdictMatrix {
    fn build(cmp: &UncertaintyComparator, acts: &[Act]) -> Result<Self> {
        let n = acts.len();
        let mut v = vec![Comparison::Equivalent; n * n];
        for i in 0..n {
            for j in 0..n {
                v[i * n + j] = lift_compare(cmp, &acts[i], &acts[j])?;
            }
        }
        Ok(VerdictMatrix { n, v })
    }

    fn get(&self, i: usize, j: usize) -> Comparison {
        self.v[i * self.n + j]
    }
}

/// Scan one comparator's lifted relation over the given acts for order
/// defects: a non-equivalent diagonal, mirror inconsistency, a strict
/// cycle through a third act, or a mixed-transitivity failure.
fn order_defect(
    cmp: &UncertaintyComparator,
    acts: &[Act],
    context: &str,
) -> Result<Option<Witness>> {
    let m = VerdictMatrix::build(cmp, acts)?;
    let n = acts.len();
    let witness = |detail: String, claims: Vec<Claim>| Witness {
        details: format!("{context}\n{detail}"),
        claims,
    };
    for i in 0..n {
        if m.get(i, i) != Comparison::Equivalent {
            return Ok(Some(witness(
                format!(
                    "act compares non-equivalent to itself\n{}",
                    describe_act("f", &acts[i])
                ),
                vec![Claim::Lift {
                    cmp: cmp.clone(),
                    f: acts[i].clone(),
                    g: acts[i].clone(),
                    allowed: vec![Comparison::Equivalent],
                }],
            )));
        }
        for j in 0..n {
            if m.get(i, j) != m.get(j, i).reverse() {
                return Ok(Some(witness(
                    format!(
                        "mirror verdicts disagree: {} vs {}\n{}\n{}",
                        m.get(i, j),
                        m.get(j, i),
                        describe_act("f", &acts[i]),
                        describe_act("g", &acts[j]),
                    ),
                    vec![Claim::Lift {
                        cmp: cmp.clone(),
                        f: acts[i].clone(),
                        g: acts[j].clone(),
                        allowed: vec![m.get(j, i).reverse()],
                    }],
                )));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = m.get(i, j);
            if ij == Comparison::Less {
                continue;
            }
            for k in 0..n {
                let jk = m.get(j, k);
                let ik = m.get(i, k);
                if ij == Comparison::Greater
                    && jk == Comparison::Greater
                    && ik != Comparison::Greater
                {
                    return Ok(Some(witness(
                        format!(
                            "strict preference fails to chain: f > g, g > h, but f {} h\n{}\n{}\n{}",
                            ik.symbol(),
                            describe_act("f", &acts[i]),
                            describe_act("g", &acts[j]),
                            describe_act("h", &acts[k]),
                        ),
                        vec![
                            Claim::Lift {
                                cmp: cmp.clone(),
                                f: acts[i].clone(),
                                g: acts[j].clone(),
                                allowed: vec![Comparison::Greater],
                            },
                            Claim::Lift {
                                cmp: cmp.clone(),
                                f: acts[j].clone(),
                                g: acts[k].clone(),
                                allowed: vec![Comparison::Greater],
                            },
                            Claim::Lift {
                                cmp: cmp.clone(),
                                f: acts[i].clone(),
                                g: acts[k].clone(),
                                allowed: vec![Comparison::Less, Comparison::Equivalent],
                            },
                        ],
                    )));
                }
                if ij == Comparison::Greater
                    && jk == Comparison::Equivalent
                    && ik == Comparison::Less
                {
                    return Ok(Some(witness(
                        format!(
                            "f > g and g ~ h, yet h > f\n{}\n{}\n{}",
                            describe_act("f", &acts[i]),
                            describe_act("g", &acts[j]),
                            describe_act("h", &acts[k]),
                        ),
                        vec![
                            Claim::Lift {
                                cmp: cmp.clone(),
                                f: acts[i].clone(),
                                g: acts[j].clone(),
                                allowed: vec![Comparison::Greater],
                            },
                            Claim::Lift {
                                cmp: cmp.clone(),
                                f: acts[j].clone(),
                                g: acts[k].clone(),
                                allowed: vec![Comparison::Equivalent],
                            },
                            Claim::Lift {
                                cmp: cmp.clone(),
                                f: acts[i].clone(),
                                g: acts[k].clone(),
                                allowed: vec![Comparison::Less],
                            },
                        ],
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Check the order structure of a lifted relation over every comparator,
/// scale, and act triple within bounds. Passes for necessity comparators;
/// a weight-sum comparator yields a strict cycle.
pub fn check_p1prime(rule: LiftRule, bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    let property = match rule {
        LiftRule::Necessity => "act-order-structure (lift-necessity)",
        LiftRule::QualitativeProbability => "act-order-structure (lift-qualprob)",
    };
    for space in spaces_up_to(bounds.max_states) {
        for scale in scales_distinct_ranks(bounds.max_ranks as usize) {
            let acts = all_acts(&space, &scale);
            let pairs = (acts.len() * acts.len()) as u64;
            let triples = pairs * acts.len() as u64;
            let comparators: Vec<UncertaintyComparator> = match rule {
                LiftRule::Necessity => profiles(&space, bounds.max_levels)
                    .into_iter()
                    .map(UncertaintyComparator::Necessity)
                    .collect(),
                LiftRule::QualitativeProbability => weight_vectors(space.len(), 2)
                    .into_iter()
                    .map(|w| {
                        UncertaintyComparator::QualitativeProbability(
                            WeightProfile::from_integers(&space, &w)
                                .expect("positive integer weights"),
                        )
                    })
                    .collect(),
            };
            for cmp in comparators {
                budget.charge(pairs + triples)?;
                let context = format!(
                    "comparator {} over {}",
                    describe_comparator(&cmp),
                    describe_scale(&scale)
                );
                if let Some(w) = order_defect(&cmp, &acts, &context)? {
                    return Ok(CheckReport {
                        property: property.into(),
                        bounds: *bounds,
                        instances: budget.used(),
                        outcome: CheckOutcome::Counterexample(w),
                    });
                }
            }
        }
    }
    Ok(CheckReport {
        property: property.into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

/// Order-structure check for one specific comparator and act list (for
/// problems read from a file).
pub fn check_p1prime_on(
    cmp: &UncertaintyComparator,
    acts: &[(String, Act)],
    bounds: &SearchBounds,
) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    let plain: Vec<Act> = acts.iter().map(|(_, a)| a.clone()).collect();
    let pairs = (plain.len() * plain.len()) as u64;
    budget.charge(pairs + pairs * plain.len() as u64)?;
    let names: Vec<String> = acts.iter().map(|(n, _)| n.clone()).collect();
    let context = format!(
        "comparator {} over acts {}",
        describe_comparator(cmp),
        names.join(", ")
    );
    let outcome = match order_defect(cmp, &plain, &context)? {
        Some(w) => CheckOutcome::Counterexample(w),
        None => CheckOutcome::Pass,
    };
    Ok(CheckReport {
        property: format!("act-order-structure ({})", cmp.kind_name()),
        bounds: *bounds,
        instances: budget.used(),
        outcome,
    })
}

fn describe_comparator(cmp: &UncertaintyComparator) -> String {
    match cmp {
        UncertaintyComparator::Necessity(p) => format!("necessity {}", describe_profile(p)),
        UncertaintyComparator::Possibility(p) => format!("possibility {}", describe_profile(p)),
        UncertaintyComparator::QualitativeProbability(w) => {
            let parts: Vec<String> = (0..w.space().len())
                .map(|i| format!("{}:{}", w.space().name(i), w.weight(i)))
                .collect();
            format!("weights[{}]", parts.join(", "))
        }
    }
}

/// Sure-thing principle: the comparison of two acts spliced over a common
/// continuation never depends on the continuation, and always equals the
/// conditional comparison on the splicing event.
pub fn check_sure_thing(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for scale in scales_distinct_ranks(bounds.max_ranks as usize) {
            let acts = all_acts(&space, &scale);
            for profile in profiles(&space, bounds.max_levels) {
                let cmp = UncertaintyComparator::Necessity(profile.clone());
                for f in &acts {
                    for g in &acts {
                        budget.charge(events.len() as u64)?;
                        for on in &events {
                            let expected = lift_compare_conditional(&profile, f, g, on)?;
                            for h in &acts {
                                let fa = f.splice(on, h)?;
                                let ga = g.splice(on, h)?;
                                let got = lift_compare(&cmp, &fa, &ga)?;
                                if got != expected {
                                    let w = Witness {
                                        details: format!(
                                            "splice comparison depends on the continuation\n{}\n{}\nevent A = {}\n{}\n{}\nconditional verdict {} but spliced verdict {}",
                                            describe_profile(&profile),
                                            describe_scale(&scale),
                                            on,
                                            describe_act("f", f),
                                            describe_act("g", g),
                                            expected,
                                            got
                                        ),
                                        claims: vec![
                                            Claim::Conditional {
                                                profile: profile.clone(),
                                                f: f.clone(),
                                                g: g.clone(),
                                                given: on.clone(),
                                                allowed: vec![expected],
                                            },
                                            Claim::Lift {
                                                cmp: cmp.clone(),
                                                f: fa.clone(),
                                                g: ga.clone(),
                                                allowed: vec![got],
                                            },
                                        ],
                                    };
                                    return Ok(CheckReport {
                                        property: "sure-thing-principle".into(),
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
        }
    }
    Ok(CheckReport {
        property: "sure-thing-principle".into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

/// Constant-act compatibility: conditioned on any non-null event, constant
/// acts compare exactly as their consequences rank.
pub fn check_constant_acts(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for scale in scales_distinct_ranks(bounds.max_ranks as usize) {
            let constants: Vec<Act> = (0..scale.len())
                .map(|i| Act::constant(&space, &scale, scale.name(i)).expect("constant act"))
                .collect();
            for profile in profiles(&space, bounds.max_levels) {
                for (xi, fx) in constants.iter().enumerate() {
                    for (yi, fy) in constants.iter().enumerate() {
                        budget.charge(events.len() as u64)?;
                        for on in &events {
                            if profile.is_null_event(on)? {
                                continue; // exempt by the postulate itself
                            }
                            let expected =
                                Comparison::from_ord(scale.rank(xi).cmp(&scale.rank(yi)));
                            let got = lift_compare_conditional(&profile, fx, fy, on)?;
                            if got != expected {
                                let w = Witness {
                                    details: format!(
                                        "constant acts disagree with their ranks given {}\n{}\n{}\nx = {}, y = {}, expected {}, got {}",
                                        on,
                                        describe_profile(&profile),
                                        describe_scale(&scale),
                                        scale.name(xi),
                                        scale.name(yi),
                                        expected,
                                        got
                                    ),
                                    claims: vec![Claim::Conditional {
                                        profile: profile.clone(),
                                        f: fx.clone(),
                                        g: fy.clone(),
                                        given: on.clone(),
                                        allowed: vec![got],
                                    }],
                                };
                                return Ok(CheckReport {
                                    property: "constant-act-compatibility".into(),
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
    }
    Ok(CheckReport {
        property: "constant-act-compatibility".into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

/// Two-consequence act comparison: the verdict on a pair of events is
/// independent of the chosen consequence pair, and coincides with the
/// likelihood relation.
pub fn check_two_outcome_events(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for scale in scales_distinct_ranks(bounds.max_ranks as usize) {
            let (best, worse) = {
                let pair = scale.strict_pairs()[0];
                (
                    scale.name(pair.0).to_string(),
                    scale.name(pair.1).to_string(),
                )
            };
            for profile in profiles(&space, bounds.max_levels) {
                let cmp = UncertaintyComparator::Necessity(profile.clone());
                for a in &events {
                    budget.charge(events.len() as u64)?;
                    for b in &events {
                        // the operation itself re-verifies pair-independence
                        // and errors out on any dependence
                        let verdict =
                            match event_compare_via_acts(&cmp, &scale, a, b, &best, &worse) {
                                Ok(v) => v,
                                Err(crate::error::Error::Internal(msg)) => {
                                    let w = Witness {
                                        details: format!(
                                            "{}\n{}\n{}\nA = {a}, B = {b}",
                                            msg,
                                            describe_profile(&profile),
                                            describe_scale(&scale)
                                        ),
                                        claims: vec![Claim::EventCompareDependsOnPair {
                                            cmp: cmp.clone(),
                                            scale: scale.clone(),
                                            a: a.clone(),
                                            b: b.clone(),
                                        }],
                                    };
                                    return Ok(CheckReport {
                                        property: "two-outcome-event-comparison".into(),
                                        bounds: *bounds,
                                        instances: budget.used(),
                                        outcome: CheckOutcome::Counterexample(w),
                                    });
                                }
                                Err(e) => return Err(e),
                            };
                        let expected = likelihood_compare(&profile, a, b)?;
                        if verdict != expected {
                            let w = Witness {
                                details: format!(
                                    "two-outcome comparison disagrees with the likelihood relation\n{}\n{}\nA = {a}, B = {b}: acts say {verdict}, likelihood says {expected}",
                                    describe_profile(&profile),
                                    describe_scale(&scale)
                                ),
                                claims: vec![Claim::Likelihood {
                                    profile: profile.clone(),
                                    a: a.clone(),
                                    b: b.clone(),
                                    allowed: vec![expected],
                                }],
                            };
                            return Ok(CheckReport {
                                property: "two-outcome-event-comparison".into(),
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
        property: "two-outcome-event-comparison".into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

/// Unanimity: weakly preferred on an event and equivalent outside it
/// implies weakly preferred overall.
pub fn check_unanimity(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for scale in scales_distinct_ranks(bounds.max_ranks as usize) {
            let acts = all_acts(&space, &scale);
            for profile in profiles(&space, bounds.max_levels) {
                let cmp = UncertaintyComparator::Necessity(profile.clone());
                for f in &acts {
                    for g in &acts {
                        budget.charge(events.len() as u64)?;
                        for on in &events {
                            let inside = lift_compare_conditional(&profile, f, g, on)?;
                            if !inside.is_weak_ge() {
                                continue;
                            }
                            let outside =
                                lift_compare_conditional(&profile, f, g, &on.complement())?;
                            if outside != Comparison::Equivalent {
                                continue;
                            }
                            let overall = lift_compare(&cmp, f, g)?;
                            if !overall.is_weak_ge() {
                                let w = Witness {
                                    details: format!(
                                        "unanimity failure on A = {on}\n{}\n{}\n{}\n{}\ninside {}, outside {}, overall {}",
                                        describe_profile(&profile),
                                        describe_scale(&scale),
                                        describe_act("f", f),
                                        describe_act("g", g),
                                        inside,
                                        outside,
                                        overall
                                    ),
                                    claims: vec![
                                        Claim::Conditional {
                                            profile: profile.clone(),
                                            f: f.clone(),
                                            g: g.clone(),
                                            given: on.clone(),
                                            allowed: ALLOWED_WEAK.to_vec(),
                                        },
                                        Claim::Conditional {
                                            profile: profile.clone(),
                                            f: f.clone(),
                                            g: g.clone(),
                                            given: on.complement(),
                                            allowed: vec![Comparison::Equivalent],
                                        },
                                        Claim::Lift {
                                            cmp: cmp.clone(),
                                            f: f.clone(),
                                            g: g.clone(),
                                            allowed: vec![Comparison::Less],
                                        },
                                    ],
                                };
                                return Ok(CheckReport {
                                    property: "unanimity".into(),
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
    }
    Ok(CheckReport {
        property: "unanimity".into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

/// The constant-act and two-consequence checks bundled with unanimity,
/// reported separately.
pub fn check_p3_p4_u(bounds: &SearchBounds) -> Result<Vec<CheckReport>> {
    Ok(vec![
        check_constant_acts(bounds)?,
        check_two_outcome_events(bounds)?,
        check_unanimity(bounds)?,
    ])
}

/// The certainty-side form (necessity of the weak agreement sets) and the
/// possibility-side form (possibility of the strict agreement sets) of the
/// lifting rule give identical verdicts, unconditionally and conditionally.
pub fn check_lift_forms(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for scale in scales_distinct_ranks(bounds.max_ranks as usize) {
            let acts = all_acts(&space, &scale);
            for profile in profiles(&space, bounds.max_levels) {
                let cmp = UncertaintyComparator::Necessity(profile.clone());
                for f in &acts {
                    for g in &acts {
                        budget.charge(1 + events.len() as u64)?;
                        let necessity_form = lift_compare(&cmp, f, g)?;
                        let pi_form = profile.compare_possibility(
                            &f.strict_agreement_set(g)?,
                            &g.strict_agreement_set(f)?,
                        )?;
                        if necessity_form != pi_form {
                            return Ok(forms_mismatch_report(
                                bounds,
                                budget.used(),
                                &profile,
                                &scale,
                                f,
                                g,
                                None,
                                necessity_form,
                                pi_form,
                            ));
                        }
                        for on in &events {
                            let pi_cond = lift_compare_conditional(&profile, f, g, on)?;
                            let n_cond = profile.compare_necessity(
                                &f.agreement_set(g)?.union(&on.complement()),
                                &g.agreement_set(f)?.union(&on.complement()),
                            )?;
                            if pi_cond != n_cond {
                                return Ok(forms_mismatch_report(
                                    bounds,
                                    budget.used(),
                                    &profile,
                                    &scale,
                                    f,
                                    g,
                                    Some(on),
                                    n_cond,
                                    pi_cond,
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(CheckReport {
        property: "lift-form-agreement".into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

#[allow(clippy::too_many_arguments)]
fn forms_mismatch_report(
    bounds: &SearchBounds,
    instances: u64,
    profile: &PossibilityProfile,
    scale: &OutcomeScale,
    f: &Act,
    g: &Act,
    on: Option<&Event>,
    necessity_form: Comparison,
    pi_form: Comparison,
) -> CheckReport {
    let given = on.map(|e| format!(" given {e}")).unwrap_or_default();
    let claims = match on {
        Some(on) => vec![Claim::Conditional {
            profile: profile.clone(),
            f: f.clone(),
            g: g.clone(),
            given: on.clone(),
            allowed: vec![pi_form],
        }],
        None => vec![Claim::Lift {
            cmp: UncertaintyComparator::Necessity(profile.clone()),
            f: f.clone(),
            g: g.clone(),
            allowed: vec![necessity_form],
        }],
    };
    CheckReport {
        property: "lift-form-agreement".into(),
        bounds: *bounds,
        instances,
        outcome: CheckOutcome::Counterexample(Witness {
            details: format!(
                "the two forms of the lifting rule disagree{given}\n{}\n{}\n{}\n{}\ncertainty form {necessity_form}, possibility form {pi_form}",
                describe_profile(profile),
                describe_scale(scale),
                describe_act("f", f),
                describe_act("g", g),
            ),
            claims,
        }),
    }
}

/// The full postulate suite for the necessity-lifted relation.
pub fn savage_suite(bounds: &SearchBounds) -> Result<Vec<CheckReport>> {
    let mut out = vec![check_p1prime(LiftRule::Necessity, bounds)?];
    out.push(check_sure_thing(bounds)?);
    out.extend(check_p3_p4_u(bounds)?);
    out.push(check_lift_forms(bounds)?);
    Ok(out)
}
