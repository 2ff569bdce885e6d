//! Checks of the event-relation properties that the lifted preference
//! induces: nontriviality, additivity, duality, inclusion coherence,
//! null-event behavior, union laws, and the refinement facts tying the
//! likelihood relation to the necessity and possibility orderings.

use super::enumerate::{profiles, scales_distinct_ranks, spaces_up_to};
use super::{describe_profile, Budget, CheckOutcome, CheckReport, Claim, SearchBounds, Witness};
use crate::comparison::Comparison;
use crate::error::Result;
use crate::lifting::lift_compare;
use crate::likelihood::{discrimax_compare, likelihood_compare, pi_mutually_exclusive};
use crate::ordinal::{all_events_canonical, Event};
use crate::uncertainty::{PossibilityProfile, UncertaintyComparator};

/// The seventeen event-relation properties, in their conventional order.
/// Index `k` (1-based) names property `k` of the list.
pub const EVENT_PROPERTY_NAMES: [&str; 17] = [
    "nontrivial-top",                     // 1: S > {}
    "bottom-minimal",                     // 2: A >= {}
    "additivity",                         // 3
    "difference-form",                    // 4
    "autoduality",                        // 5
    "inclusion-coherence",                // 6
    "strict-residual",                    // 7
    "null-indifference",                  // 8
    "strict-lift-through-inclusion",      // 9
    "equivalence-lift-through-inclusion", // 10
    "weak-lift-through-inclusion",        // 11
    "support-propagation",                // 12
    "null-decomposition",                 // 13
    "consequence-preorder",               // 14
    "disjoint-union-strict",              // 15
    "disjoint-union-mixed",               // 16
    "inclusion-bridge",                   // 17
];

struct EventCtx<'a> {
    profile: &'a PossibilityProfile,
    events: &'a [Event],
}

impl EventCtx<'_> {
    fn lik(&self, a: &Event, b: &Event) -> Comparison {
        likelihood_compare(self.profile, a, b).expect("same-space events")
    }

    fn strictly_likelier(&self, a: &Event, b: &Event) -> bool {
        self.lik(a, b) == Comparison::Greater
    }

    fn at_least_as_likely(&self, a: &Event, b: &Event) -> bool {
        self.lik(a, b).is_weak_ge()
    }
}

/// A found violation: events bound to role names, plus the claims that pin
/// the violating verdicts.
struct Violation {
    roles: Vec<(&'static str, Event)>,
    claims: Vec<Claim>,
}

fn likelihood_claim(
    profile: &PossibilityProfile,
    a: &Event,
    b: &Event,
    allowed: &[Comparison],
) -> Claim {
    Claim::Likelihood {
        profile: profile.clone(),
        a: a.clone(),
        b: b.clone(),
        allowed: allowed.to_vec(),
    }
}

/// Check one numbered event property (1-based) on one profile. Returns the
/// first violating instance in canonical order.
fn event_property_violation(index: usize, ctx: &EventCtx) -> Result<Option<Violation>> {
    let profile = ctx.profile;
    let space = profile.space();
    let events = ctx.events;
    let empty = space.empty_event();
    let full = space.full_event();
    let strict = [Comparison::Greater];
    let weak = [Comparison::Greater, Comparison::Equivalent];
    let not_strict = [Comparison::Less, Comparison::Equivalent];
    let eq = [Comparison::Equivalent];

    macro_rules! violated {
        ($($role:expr => $event:expr),+ ; $($claim:expr),+) => {
            return Ok(Some(Violation {
                roles: vec![$(($role, $event.clone())),+],
                claims: vec![$($claim),+],
            }))
        };
    }

    match index {
        1 => {
            if !ctx.strictly_likelier(&full, &empty) {
                violated!("S" => full, "{}" => empty ;
                    likelihood_claim(profile, &full, &empty, &not_strict));
            }
        }
        2 => {
            for a in events {
                if !ctx.at_least_as_likely(a, &empty) {
                    violated!("A" => a ; likelihood_claim(profile, a, &empty, &[Comparison::Less]));
                }
            }
        }
        3 => {
            for a in events {
                for b in events {
                    for c in events {
                        if !a.intersection(&b.union(c)).is_empty() {
                            continue;
                        }
                        let plain = ctx.lik(b, c);
                        let shifted = ctx.lik(&a.union(b), &a.union(c));
                        if plain != shifted {
                            violated!("A" => a, "B" => b, "C" => c ;
                                likelihood_claim(profile, b, c, &[plain]),
                                likelihood_claim(profile, &a.union(b), &a.union(c), &[plain]));
                        }
                    }
                }
            }
        }
        4 => {
            for a in events {
                for b in events {
                    let direct = ctx.lik(a, b);
                    let differences = ctx.lik(&a.difference(b), &b.difference(a));
                    if direct != differences {
                        violated!("A" => a, "B" => b ;
                            likelihood_claim(profile, a, b, &[direct]),
                            likelihood_claim(profile, &a.difference(b), &b.difference(a), &[direct]));
                    }
                }
            }
        }
        5 => {
            for a in events {
                for b in events {
                    let direct = ctx.lik(a, b);
                    let flipped = ctx.lik(&a.complement(), &b.complement());
                    if direct != flipped.reverse() {
                        violated!("A" => a, "B" => b ;
                            likelihood_claim(profile, a, b, &[direct]),
                            likelihood_claim(profile, &a.complement(), &b.complement(), &[direct.reverse()]));
                    }
                }
            }
        }
        6 => {
            for a in events {
                for b in events {
                    if a.is_subset_of(b) && !ctx.at_least_as_likely(b, a) {
                        violated!("A" => a, "B" => b ;
                            likelihood_claim(profile, b, a, &[Comparison::Less]));
                    }
                }
            }
        }
        7 => {
            for a in events {
                for b in events {
                    if !a.is_subset_of(b) {
                        continue;
                    }
                    let residual_positive = ctx.strictly_likelier(&b.difference(a), &empty);
                    let strict_gap = ctx.strictly_likelier(b, a);
                    if residual_positive != strict_gap {
                        let res = b.difference(a);
                        violated!("A" => a, "B" => b, "B-A" => res ;
                            likelihood_claim(profile, &res, &empty,
                                if residual_positive { &strict } else { &not_strict }),
                            likelihood_claim(profile, b, a,
                                if strict_gap { &strict } else { &not_strict }));
                    }
                }
            }
        }
        8 => {
            for a in events {
                let null = profile.is_null_event(a)?;
                let indifferent = ctx.lik(a, &empty) == Comparison::Equivalent;
                if null != indifferent {
                    violated!("A" => a ;
                        likelihood_claim(profile, a, &empty,
                            if indifferent { &eq } else { &strict }));
                }
            }
        }
        9 => {
            for a in events {
                for b in events {
                    if !(a.is_subset_of(b) && ctx.strictly_likelier(&b.difference(a), &empty)) {
                        continue;
                    }
                    for c in events {
                        if ctx.strictly_likelier(a, c) && !ctx.strictly_likelier(b, c) {
                            violated!("A" => a, "B" => b, "C" => c ;
                                likelihood_claim(profile, a, c, &strict),
                                likelihood_claim(profile, b, c, &not_strict));
                        }
                    }
                }
            }
        }
        10 => {
            for a in events {
                for b in events {
                    if !(a.is_subset_of(b) && ctx.strictly_likelier(&b.difference(a), &empty)) {
                        continue;
                    }
                    for c in events {
                        if ctx.lik(a, c) == Comparison::Equivalent && !ctx.at_least_as_likely(b, c)
                        {
                            violated!("A" => a, "B" => b, "C" => c ;
                                likelihood_claim(profile, a, c, &eq),
                                likelihood_claim(profile, b, c, &[Comparison::Less]));
                        }
                    }
                }
            }
        }
        11 => {
            for a in events {
                for b in events {
                    if !a.is_subset_of(b) {
                        continue;
                    }
                    for c in events {
                        if ctx.strictly_likelier(a, c) && !ctx.at_least_as_likely(b, c) {
                            violated!("A" => a, "B" => b, "C" => c ;
                                likelihood_claim(profile, a, c, &strict),
                                likelihood_claim(profile, b, c, &[Comparison::Less]));
                        }
                    }
                }
            }
        }
        12 => {
            for s in 0..space.len() {
                let singleton = space.event_from_mask(1 << s);
                if !ctx.strictly_likelier(&singleton, &empty) {
                    continue;
                }
                for a in events {
                    if a.contains_index(s) && !ctx.strictly_likelier(a, &empty) {
                        violated!("{s}" => singleton, "A" => a ;
                            likelihood_claim(profile, &singleton, &empty, &strict),
                            likelihood_claim(profile, a, &empty, &not_strict));
                    }
                }
            }
        }
        13 => {
            for a in events {
                if ctx.lik(a, &empty) != Comparison::Equivalent {
                    continue;
                }
                for s in a.member_indices() {
                    let singleton = space.event_from_mask(1 << s);
                    if ctx.lik(&singleton, &empty) != Comparison::Equivalent {
                        violated!("A" => a, "{s}" => singleton ;
                            likelihood_claim(profile, a, &empty, &eq),
                            likelihood_claim(profile, &singleton, &empty, &strict));
                    }
                }
            }
        }
        14 => {
            // with two or more non-null states, the lifted relation on
            // constant acts is a complete preorder (its indifference is
            // transitive), checked over a three-rank scale
            let non_null = (0..space.len()).filter(|&i| profile.level(i) > 0).count();
            if non_null >= 2 {
                let scale = scales_distinct_ranks(3).remove(0);
                let cmp = UncertaintyComparator::Necessity(profile.clone());
                let consts: Vec<_> = (0..scale.len())
                    .map(|i| {
                        crate::ordinal::Act::constant(space, &scale, scale.name(i))
                            .expect("constant act")
                    })
                    .collect();
                for x in &consts {
                    for y in &consts {
                        let xy = lift_compare(&cmp, x, y)?;
                        for z in &consts {
                            let yz = lift_compare(&cmp, y, z)?;
                            let xz = lift_compare(&cmp, x, z)?;
                            let both_eq =
                                xy == Comparison::Equivalent && yz == Comparison::Equivalent;
                            if both_eq && xz != Comparison::Equivalent {
                                return Ok(Some(Violation {
                                    roles: vec![],
                                    claims: vec![Claim::Lift {
                                        cmp: cmp.clone(),
                                        f: x.clone(),
                                        g: z.clone(),
                                        allowed: vec![Comparison::Greater, Comparison::Less],
                                    }],
                                }));
                            }
                        }
                    }
                }
            }
        }
        15 => {
            for a in events {
                for b in events {
                    for c in events {
                        if !a.intersection(&b.union(c)).is_empty() {
                            continue;
                        }
                        if ctx.strictly_likelier(a, b)
                            && ctx.strictly_likelier(a, c)
                            && !ctx.strictly_likelier(a, &b.union(c))
                        {
                            violated!("A" => a, "B" => b, "C" => c ;
                                likelihood_claim(profile, a, b, &strict),
                                likelihood_claim(profile, a, c, &strict),
                                likelihood_claim(profile, a, &b.union(c), &not_strict));
                        }
                    }
                }
            }
        }
        16 => {
            for a in events {
                for b in events {
                    for c in events {
                        if !a.intersection(&b.union(c)).is_empty() {
                            continue;
                        }
                        if ctx.strictly_likelier(a, b)
                            && ctx.at_least_as_likely(a, c)
                            && !ctx.at_least_as_likely(a, &b.union(c))
                        {
                            violated!("A" => a, "B" => b, "C" => c ;
                                likelihood_claim(profile, a, b, &strict),
                                likelihood_claim(profile, a, c, &weak),
                                likelihood_claim(profile, a, &b.union(c), &[Comparison::Less]));
                        }
                    }
                }
            }
        }
        17 => {
            for a in events {
                for b in events {
                    if !a.is_subset_of(b) {
                        continue;
                    }
                    for c in events {
                        if !b.intersection(c).is_empty() {
                            continue;
                        }
                        if ctx.at_least_as_likely(a, c) && !ctx.at_least_as_likely(b, c) {
                            violated!("A" => a, "B" => b, "C" => c ;
                                likelihood_claim(profile, a, c, &weak),
                                likelihood_claim(profile, b, c, &[Comparison::Less]));
                        }
                    }
                }
            }
        }
        _ => unreachable!("event properties are numbered 1..=17"),
    }
    Ok(None)
}

fn property_cost(index: usize, n_events: u64) -> u64 {
    match index {
        1 => 1,
        2 | 8 | 13 => n_events,
        4 | 5 | 6 | 7 | 12 | 14 => n_events * n_events,
        _ => n_events * n_events * n_events,
    }
}

/// Check event properties 1..=17 on the likelihood relation of every
/// profile within bounds. One report per property.
pub fn check_event_properties(bounds: &SearchBounds) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::with_capacity(17);
    for (idx0, name) in EVENT_PROPERTY_NAMES.iter().enumerate() {
        let index = idx0 + 1;
        let mut budget = Budget::new(bounds)?;
        let mut outcome = CheckOutcome::Pass;
        'sweep: for space in spaces_up_to(bounds.max_states) {
            let events = all_events_canonical(&space);
            for profile in profiles(&space, bounds.max_levels) {
                budget.charge(property_cost(index, events.len() as u64))?;
                let ctx = EventCtx {
                    profile: &profile,
                    events: &events,
                };
                if let Some(violation) = event_property_violation(index, &ctx)? {
                    let mut details = format!(
                        "event property {index} ({name}) fails\n{}",
                        describe_profile(&profile)
                    );
                    for (role, event) in &violation.roles {
                        details.push_str(&format!("\n{role} = {event}"));
                    }
                    outcome = CheckOutcome::Counterexample(Witness {
                        details,
                        claims: violation.claims,
                    });
                    break 'sweep;
                }
            }
        }
        reports.push(CheckReport {
            property: format!("event property {index} ({name})"),
            bounds: *bounds,
            instances: budget.used(),
            outcome,
        });
    }
    Ok(reports)
}

fn simple_report(
    property: &str,
    bounds: &SearchBounds,
    budget: Budget,
    witness: Option<Witness>,
) -> CheckReport {
    CheckReport {
        property: property.into(),
        bounds: *bounds,
        instances: budget.used(),
        outcome: match witness {
            Some(w) => CheckOutcome::Counterexample(w),
            None => CheckOutcome::Pass,
        },
    }
}

/// Strictly higher necessity forces a strictly higher likelihood verdict.
pub fn check_refines_necessity(bounds: &SearchBounds) -> Result<CheckReport> {
    refinement_check(bounds, "likelihood-refines-necessity", |p, a, b| {
        p.compare_necessity(a, b)
    })
}

/// Strictly higher possibility forces a strictly higher likelihood verdict.
pub fn check_refines_possibility(bounds: &SearchBounds) -> Result<CheckReport> {
    refinement_check(bounds, "likelihood-refines-possibility", |p, a, b| {
        p.compare_possibility(a, b)
    })
}

fn refinement_check<F>(bounds: &SearchBounds, property: &str, coarse: F) -> Result<CheckReport>
where
    F: Fn(&PossibilityProfile, &Event, &Event) -> Result<Comparison>,
{
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for profile in profiles(&space, bounds.max_levels) {
            budget.charge((events.len() * events.len()) as u64)?;
            for a in &events {
                for b in &events {
                    if coarse(&profile, a, b)? == Comparison::Greater
                        && likelihood_compare(&profile, a, b)? != Comparison::Greater
                    {
                        let w = Witness {
                            details: format!(
                                "{property} fails\n{}\nA = {a}, B = {b}",
                                describe_profile(&profile)
                            ),
                            claims: vec![likelihood_claim(
                                &profile,
                                a,
                                b,
                                &[Comparison::Less, Comparison::Equivalent],
                            )],
                        };
                        return Ok(simple_report(property, bounds, budget, Some(w)));
                    }
                }
            }
        }
    }
    Ok(simple_report(property, bounds, budget, None))
}

/// The two implementations of the likelihood relation agree everywhere.
pub fn check_discrimax_agreement(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for profile in profiles(&space, bounds.max_levels) {
            budget.charge((events.len() * events.len()) as u64)?;
            for a in &events {
                for b in &events {
                    let lhs = likelihood_compare(&profile, a, b)?;
                    let rhs = discrimax_compare(&profile, a, b)?;
                    if lhs != rhs {
                        let w = Witness {
                            details: format!(
                                "likelihood and discrimax verdicts disagree\n{}\nA = {a}, B = {b}: {lhs} vs {rhs}",
                                describe_profile(&profile)
                            ),
                            claims: vec![likelihood_claim(&profile, a, b, &[rhs])],
                        };
                        return Ok(simple_report(
                            "discrimax-agreement",
                            bounds,
                            budget,
                            Some(w),
                        ));
                    }
                }
            }
        }
    }
    Ok(simple_report("discrimax-agreement", bounds, budget, None))
}

/// On possibility-exclusive pairs the likelihood verdict collapses to the
/// plain possibility comparison.
pub fn check_exclusive_collapse(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for profile in profiles(&space, bounds.max_levels) {
            budget.charge((events.len() * events.len()) as u64)?;
            for a in &events {
                for b in &events {
                    if !pi_mutually_exclusive(&profile, a, b)? {
                        continue;
                    }
                    let lik = likelihood_compare(&profile, a, b)?;
                    let pi = profile.compare_possibility(a, b)?;
                    if lik != pi {
                        let w = Witness {
                            details: format!(
                                "exclusive pair does not collapse to possibility\n{}\nA = {a}, B = {b}: likelihood {lik}, possibility {pi}",
                                describe_profile(&profile)
                            ),
                            claims: vec![likelihood_claim(&profile, a, b, &[pi])],
                        };
                        return Ok(simple_report(
                            "exclusivity-collapse",
                            bounds,
                            budget,
                            Some(w),
                        ));
                    }
                }
            }
        }
    }
    Ok(simple_report("exclusivity-collapse", bounds, budget, None))
}

/// Disjoint-union law for weak preference and the disjoint-pair union law.
pub fn check_union_laws(bounds: &SearchBounds) -> Result<CheckReport> {
    let mut budget = Budget::new(bounds)?;
    for space in spaces_up_to(bounds.max_states) {
        let events = all_events_canonical(&space);
        for profile in profiles(&space, bounds.max_levels) {
            budget.charge((events.len() * events.len() * events.len()) as u64)?;
            let ctx = EventCtx {
                profile: &profile,
                events: &events,
            };
            for a in &events {
                for b in &events {
                    for c in &events {
                        if a.intersection(&b.union(c)).is_empty()
                            && ctx.at_least_as_likely(a, b)
                            && ctx.at_least_as_likely(a, c)
                            && !ctx.at_least_as_likely(a, &b.union(c))
                        {
                            let w = Witness {
                                details: format!(
                                    "disjoint weak-union law fails\n{}\nA = {a}, B = {b}, C = {c}",
                                    describe_profile(&profile)
                                ),
                                claims: vec![likelihood_claim(
                                    &profile,
                                    a,
                                    &b.union(c),
                                    &[Comparison::Less],
                                )],
                            };
                            return Ok(simple_report("union-laws", bounds, budget, Some(w)));
                        }
                        let pairwise_disjoint =
                            a.is_disjoint_from(b) && a.is_disjoint_from(c) && b.is_disjoint_from(c);
                        if pairwise_disjoint
                            && ctx.strictly_likelier(&a.union(b), c)
                            && ctx.strictly_likelier(&a.union(c), b)
                            && !ctx.strictly_likelier(a, &b.union(c))
                        {
                            let w = Witness {
                                details: format!(
                                    "disjoint-pair union law fails\n{}\nA = {a}, B = {b}, C = {c}",
                                    describe_profile(&profile)
                                ),
                                claims: vec![
                                    likelihood_claim(
                                        &profile,
                                        &a.union(b),
                                        c,
                                        &[Comparison::Greater],
                                    ),
                                    likelihood_claim(
                                        &profile,
                                        &a.union(c),
                                        b,
                                        &[Comparison::Greater],
                                    ),
                                    likelihood_claim(
                                        &profile,
                                        a,
                                        &b.union(c),
                                        &[Comparison::Less, Comparison::Equivalent],
                                    ),
                                ],
                            };
                            return Ok(simple_report("union-laws", bounds, budget, Some(w)));
                        }
                    }
                }
            }
        }
    }
    Ok(simple_report("union-laws", bounds, budget, None))
}

/// The full likelihood suite: refinements (with strict witnesses expected
/// to exist), implementation agreement, exclusivity collapse, union laws,
/// and the seventeen event properties.
pub fn likelihood_suite(bounds: &SearchBounds) -> Result<Vec<CheckReport>> {
    let mut out = vec![
        check_refines_necessity(bounds)?,
        check_refines_possibility(bounds)?,
        super::search::search_counterexample(
            super::search::SearchProperty::LikelihoodStrictlyRefinesNecessity,
            bounds,
        )?,
        super::search::search_counterexample(
            super::search::SearchProperty::LikelihoodStrictlyRefinesPossibility,
            bounds,
        )?,
        check_discrimax_agreement(bounds)?,
        check_exclusive_collapse(bounds)?,
        check_union_laws(bounds)?,
    ];
    out.extend(check_event_properties(bounds)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SearchBounds {
        SearchBounds {
            max_states: 3,
            max_levels: 2,
            max_ranks: 3,
            max_acts: 3,
            ceiling: 10_000_000,
        }
    }

    #[test]
    fn event_properties_hold_on_small_bounds() {
        for report in check_event_properties(&small()).unwrap() {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn refinements_and_agreement_hold_on_small_bounds() {
        assert!(check_refines_necessity(&small()).unwrap().passed());
        assert!(check_refines_possibility(&small()).unwrap().passed());
        assert!(check_discrimax_agreement(&small()).unwrap().passed());
        assert!(check_exclusive_collapse(&small()).unwrap().passed());
        assert!(check_union_laws(&small()).unwrap().passed());
    }
}
