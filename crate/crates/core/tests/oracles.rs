//! Independent oracles for the derived verdicts: every value asserted here
//! is first computed by a brute-force route that does not share code with
//! the implementation it checks, then compared against the public API.

use ordec_core::fixtures;
use ordec_core::harness::enumerate::{all_acts, level_assignments, scales_distinct_ranks};
use ordec_core::lifting::{
    consequence_lift_compare, lift_compare, lift_compare_conditional, Attitude,
};
use ordec_core::likelihood::likelihood_compare;
use ordec_core::nonmonotonic::{accepted_set, nm_entails};
use ordec_core::ordinal::{all_events_canonical, Act, Event, StateSpace};
use ordec_core::{Comparison, PossibilityProfile, UncertaintyComparator};

/// Oracle: possibility of an event by scanning raw state levels.
fn naive_possibility(levels: &[u8], event: &Event) -> u8 {
    (0..levels.len())
        .filter(|&i| event.contains_index(i))
        .map(|i| levels[i])
        .max()
        .unwrap_or(0)
}

/// Oracle: three-way verdict from two numbers.
fn verdict(a: u8, b: u8) -> Comparison {
    Comparison::from_ord(a.cmp(&b))
}

/// Oracle for the lifted verdict of a necessity comparator: compare raw
/// maxima over the states where one act strictly beats the other.
fn naive_necessity_lift(levels: &[u8], f: &Act, g: &Act) -> Comparison {
    let mut best_f = 0;
    let mut best_g = 0;
    for (s, &level) in levels.iter().enumerate() {
        if f.rank_at(s) > g.rank_at(s) {
            best_f = best_f.max(level);
        }
        if g.rank_at(s) > f.rank_at(s) {
            best_g = best_g.max(level);
        }
    }
    verdict(best_f, best_g)
}

#[test]
fn necessity_comparison_matches_complement_scan() {
    // derived: over {fresh:2, rotten:1}, {fresh} is more certain than
    // {rotten} because its complement is the less possible one
    let fx = fixtures::omelette();
    let p = fx.profile_fresh_likely();
    let fresh = fx.space.singleton("fresh").unwrap();
    let rotten = fx.space.singleton("rotten").unwrap();

    let levels = [2u8, 1];
    let oracle = verdict(
        naive_possibility(&levels, &fresh.complement()),
        naive_possibility(&levels, &rotten.complement()),
    )
    .reverse();
    // oracle evaluates Pi on complements: Pi({rotten}) = 1 < Pi({fresh}) = 2
    assert_eq!(naive_possibility(&levels, &fresh.complement()), 1);
    assert_eq!(naive_possibility(&levels, &rotten.complement()), 2);
    assert_eq!(oracle, Comparison::Greater);
    assert_eq!(p.compare_necessity(&fresh, &rotten).unwrap(), oracle);
}

#[test]
fn conditional_verdicts_match_the_splice_enumeration() {
    // oracle: the conditional verdict is whatever every spliced comparison
    // yields, enumerated over all continuations
    let fx = fixtures::omelette();
    let p = fx.profile_fresh_likely();
    let cmp = UncertaintyComparator::Necessity(p.clone());
    let rotten = fx.space.singleton("rotten").unwrap();

    let ta = fx.act("TA");
    let bio = fx.act("BIO");
    let continuations = all_acts(&fx.space, &fx.scale);
    let mut spliced_verdicts = Vec::new();
    for h in &continuations {
        let left = ta.splice(&rotten, h).unwrap();
        let right = bio.splice(&rotten, h).unwrap();
        spliced_verdicts.push(lift_compare(&cmp, &left, &right).unwrap());
    }
    assert!(spliced_verdicts.iter().all(|&v| v == spliced_verdicts[0]));
    // oracle computes Pi([TA > BIO] & {rotten}) = 1 > Pi(empty) = 0
    assert_eq!(spliced_verdicts[0], Comparison::Greater);
    assert_eq!(
        lift_compare_conditional(&p, ta, bio, &rotten).unwrap(),
        spliced_verdicts[0]
    );
}

#[test]
fn conditional_splice_equivalence_holds_on_a_sweep() {
    let space = StateSpace::new(["s1", "s2"]).unwrap();
    for scale in scales_distinct_ranks(2) {
        let acts = all_acts(&space, &scale);
        for levels in level_assignments(2, 2) {
            let Ok(p) = PossibilityProfile::new(&space, levels) else {
                continue;
            };
            let cmp = UncertaintyComparator::Necessity(p.clone());
            for f in &acts {
                for g in &acts {
                    for on in all_events_canonical(&space) {
                        let conditional = lift_compare_conditional(&p, f, g, &on).unwrap();
                        for h in &acts {
                            let left = f.splice(&on, h).unwrap();
                            let right = g.splice(&on, h).unwrap();
                            assert_eq!(lift_compare(&cmp, &left, &right).unwrap(), conditional);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn lifted_verdicts_match_the_strict_maximum_oracle() {
    let fx = fixtures::omelette();
    for (levels, pairs) in [
        ([2u8, 1], [("BIO", "BAC"), ("BIO", "TA"), ("BAC", "TA")]),
        ([1u8, 2], [("TA", "BAC"), ("TA", "BIO"), ("BAC", "BIO")]),
    ] {
        let p = PossibilityProfile::new(&fx.space, levels.to_vec()).unwrap();
        let cmp = UncertaintyComparator::Necessity(p);
        for (a, b) in pairs {
            let oracle = naive_necessity_lift(&levels, fx.act(a), fx.act(b));
            assert_eq!(oracle, Comparison::Greater, "{a} vs {b}");
            assert_eq!(lift_compare(&cmp, fx.act(a), fx.act(b)).unwrap(), oracle);
        }
    }
}

#[test]
fn event_comparison_oracle_difference_sets() {
    // derived: Pi(A minus B) = 1 beats Pi(B minus A) = 0 on the witness pair
    let space = StateSpace::new(["s1", "s2", "s3"]).unwrap();
    let levels = [2u8, 2, 1];
    let p = PossibilityProfile::new(&space, levels.to_vec()).unwrap();
    let a = space.event_from_names(["s1", "s3"]).unwrap();
    let b = space.singleton("s1").unwrap();

    let oracle = verdict(
        naive_possibility(&levels, &a.difference(&b)),
        naive_possibility(&levels, &b.difference(&a)),
    );
    assert_eq!(naive_possibility(&levels, &a.difference(&b)), 1);
    assert_eq!(naive_possibility(&levels, &b.difference(&a)), 0);
    assert_eq!(oracle, Comparison::Greater);
    assert_eq!(likelihood_compare(&p, &a, &b).unwrap(), oracle);

    let s2 = space.singleton("s2").unwrap();
    let oracle_eq = verdict(
        naive_possibility(&levels, &b.difference(&s2)),
        naive_possibility(&levels, &s2.difference(&b)),
    );
    assert_eq!(oracle_eq, Comparison::Equivalent);
    assert_eq!(likelihood_compare(&p, &b, &s2).unwrap(), oracle_eq);
}

#[test]
fn entailment_matches_the_direct_possibility_comparison() {
    let fx = fixtures::omelette();
    let all = fx.space.full_event();
    let fresh = fx.space.singleton("fresh").unwrap();

    // derived: Pi({fresh}) = 2 > Pi({rotten}) = 1
    let levels = [2u8, 1];
    let inside = naive_possibility(&levels, &all.intersection(&fresh));
    let outside = naive_possibility(&levels, &all.difference(&fresh));
    assert!(inside > outside);
    assert!(nm_entails(&fx.profile_fresh_likely(), &all, &fresh).unwrap());

    // equal plausibility kills the strict comparison
    let levels = [1u8, 1];
    let inside = naive_possibility(&levels, &all.intersection(&fresh));
    let outside = naive_possibility(&levels, &all.difference(&fresh));
    assert_eq!(inside, outside);
    assert!(!nm_entails(&fx.profile_equal(), &all, &fresh).unwrap());
}

#[test]
fn accepted_set_matches_brute_force() {
    let fx = fixtures::omelette();
    let p = fx.profile_fresh_likely();
    let all = fx.space.full_event();
    let levels = [2u8, 1];

    let expected: Vec<Event> = all_events_canonical(&fx.space)
        .into_iter()
        .filter(|b| {
            naive_possibility(&levels, &all.intersection(b))
                > naive_possibility(&levels, &all.difference(b))
        })
        .collect();
    assert_eq!(accepted_set(&p, &all).unwrap(), expected);
    // which is exactly the supersets of {fresh}
    assert_eq!(expected.len(), 2);
}

/// Oracle for the consequence-side rule: recompute both sides from raw
/// preimages and level scans, then reduce with the chosen attitude.
fn naive_consequence_verdict(levels: &[u8], d1: &Act, d2: &Act, optimistic: bool) -> Comparison {
    let scale = d1.scale();
    let mut domain: Vec<usize> = Vec::new();
    for s in 0..levels.len() {
        for act in [d1, d2] {
            let c = act.outcome_index(s);
            if !domain.contains(&c) {
                domain.push(c);
            }
        }
    }
    domain.sort_unstable();
    let side = |x: &Act, y: &Act| -> Vec<u32> {
        let mut ranks = Vec::new();
        for &c in &domain {
            let px = naive_possibility(levels, &x.preimage(c).difference(&y.preimage(c)));
            let py = naive_possibility(levels, &y.preimage(c).difference(&x.preimage(c)));
            if px >= py {
                ranks.push(scale.rank(c));
            }
        }
        ranks
    };
    let pick = |ranks: &[u32]| -> Option<u32> {
        if optimistic {
            ranks.iter().copied().max()
        } else {
            ranks.iter().copied().min()
        }
    };
    match (pick(&side(d1, d2)), pick(&side(d2, d1))) {
        (None, None) => Comparison::Equivalent,
        (Some(_), None) => Comparison::Greater,
        (None, Some(_)) => Comparison::Less,
        (Some(a), Some(b)) => Comparison::from_ord(a.cmp(&b)),
    }
}

#[test]
fn consequence_rule_matches_the_preimage_oracle() {
    let fx = fixtures::omelette();
    let levels = [1u8, 1];
    let rel = ordec_core::likelihood::LikelihoodRelation::new(fx.profile_equal());
    for a in ["BIO", "BAC", "TA"] {
        for b in ["BIO", "BAC", "TA"] {
            for (attitude, optimistic) in
                [(Attitude::Pessimistic, false), (Attitude::Optimistic, true)]
            {
                let oracle = naive_consequence_verdict(&levels, fx.act(a), fx.act(b), optimistic);
                assert_eq!(
                    consequence_lift_compare(&rel, fx.act(a), fx.act(b), attitude).unwrap(),
                    oracle,
                    "{a} vs {b} ({attitude:?})"
                );
            }
        }
    }
    // the pinned regime: cautious reading favors BAC, bold reading favors BIO
    assert_eq!(
        naive_consequence_verdict(&levels, fx.act("BAC"), fx.act("BIO"), false),
        Comparison::Greater
    );
    assert_eq!(
        naive_consequence_verdict(&levels, fx.act("BIO"), fx.act("BAC"), true),
        Comparison::Greater
    );
}

#[test]
fn two_outcome_agreement_identity_backs_event_comparison() {
    // oracle: [w(A) >= w(B)] must equal A union complement(B); with that,
    // the lifted verdict on the two-outcome acts reduces to comparing
    // Pi(A minus B) with Pi(B minus A)
    let space = StateSpace::new(["s1", "s2", "s3"]).unwrap();
    let scale = scales_distinct_ranks(3).remove(0);
    let (best, worse) = ("x3", "x1");
    for a in all_events_canonical(&space) {
        for b in all_events_canonical(&space) {
            let wa = Act::two_outcome(&a, &scale, best, worse).unwrap();
            let wb = Act::two_outcome(&b, &scale, best, worse).unwrap();
            assert_eq!(wa.agreement_set(&wb).unwrap(), a.union(&b.complement()));
        }
    }
}
