//! The event likelihood relation induced by a possibility profile: compare
//! what each event has that the other lacks. It refines both the necessity
//! and the possibility orderings, and its strict part is the relation the
//! nonmonotonic machinery is built on.

use crate::comparison::Comparison;
use crate::error::Result;
use crate::ordinal::{Event, StateSpace};
use crate::uncertainty::{EventOrdering, PossibilityProfile};

/// Compare two events by the possibility of their set differences:
/// `a` beats `b` when `a` minus `b` is strictly more possible than
/// `b` minus `a`.
pub fn likelihood_compare(
    profile: &PossibilityProfile,
    a: &Event,
    b: &Event,
) -> Result<Comparison> {
    profile.compare_possibility(&a.difference(b), &b.difference(a))
}

/// Same relation, computed the discrimax way: build the two level vectors
/// (a state contributes its level to the side that contains it, 0 to the
/// other), discard coordinates where the vectors agree, and compare the
/// maxima of what is left. Kept as an independent implementation and
/// cross-checked against [`likelihood_compare`].
pub fn discrimax_compare(profile: &PossibilityProfile, a: &Event, b: &Event) -> Result<Comparison> {
    // surface the space-mismatch error the same way the primary route does
    profile.possibility_of(a)?;
    profile.possibility_of(b)?;
    let mut best_a = 0;
    let mut best_b = 0;
    for i in 0..profile.space().len() {
        let level = profile.level(i);
        let va = if a.contains_index(i) { level } else { 0 };
        let vb = if b.contains_index(i) { level } else { 0 };
        if va == vb {
            continue; // not a discriminating coordinate
        }
        best_a = best_a.max(va);
        best_b = best_b.max(vb);
    }
    Ok(Comparison::from_ord(best_a.cmp(&best_b)))
}

/// Two events are possibility-exclusive when their overlap is strictly
/// less possible than both set differences. On such pairs the likelihood
/// relation agrees with the plain possibility ordering.
pub fn pi_mutually_exclusive(profile: &PossibilityProfile, a: &Event, b: &Event) -> Result<bool> {
    let overlap = profile.possibility_of(&a.intersection(b))?;
    let a_only = profile.possibility_of(&a.difference(b))?;
    let b_only = profile.possibility_of(&b.difference(a))?;
    Ok(overlap < a_only.min(b_only))
}

/// The likelihood relation packaged as an event ordering, so it can drive
/// any rule that is generic over one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LikelihoodRelation {
    profile: PossibilityProfile,
}

impl LikelihoodRelation {
    pub fn new(profile: PossibilityProfile) -> Self {
        LikelihoodRelation { profile }
    }

    pub fn profile(&self) -> &PossibilityProfile {
        &self.profile
    }
}

impl EventOrdering for LikelihoodRelation {
    fn state_space(&self) -> &StateSpace {
        self.profile.space()
    }

    fn compare_events(&self, a: &Event, b: &Event) -> Result<Comparison> {
        likelihood_compare(&self.profile, a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::enumerate::level_assignments;
    use crate::ordinal::all_events_canonical;
    use crate::uncertainty::UncertaintyComparator;

    fn setup() -> (StateSpace, PossibilityProfile) {
        let space = StateSpace::new(["s1", "s2", "s3"]).unwrap();
        let p = PossibilityProfile::new(&space, vec![2, 2, 1]).unwrap();
        (space, p)
    }

    #[test]
    fn likelihood_on_known_pairs() {
        let (space, p) = setup();
        let s1 = space.singleton("s1").unwrap();
        let s2 = space.singleton("s2").unwrap();
        let s13 = space.event_from_names(["s1", "s3"]).unwrap();
        assert_eq!(
            likelihood_compare(&p, &s1, &s2).unwrap(),
            Comparison::Equivalent
        );
        assert_eq!(
            likelihood_compare(&p, &s13, &s1).unwrap(),
            Comparison::Greater
        );
        assert_eq!(
            likelihood_compare(&p, &s13, &s13).unwrap(),
            Comparison::Equivalent
        );
    }

    #[test]
    fn discrimax_matches_on_known_pairs() {
        let (space, p) = setup();
        let s1 = space.singleton("s1").unwrap();
        let s2 = space.singleton("s2").unwrap();
        let s13 = space.event_from_names(["s1", "s3"]).unwrap();
        assert_eq!(
            discrimax_compare(&p, &s1, &s2).unwrap(),
            Comparison::Equivalent
        );
        assert_eq!(
            discrimax_compare(&p, &s13, &s1).unwrap(),
            Comparison::Greater
        );
        assert_eq!(
            discrimax_compare(&p, &s2, &s2).unwrap(),
            Comparison::Equivalent
        );
        assert_eq!(
            discrimax_compare(&p, &space.full_event(), &space.empty_event()).unwrap(),
            Comparison::Greater
        );
    }

    #[test]
    fn exclusivity_on_known_pairs() {
        let (space, p) = setup();
        let s1 = space.singleton("s1").unwrap();
        let s2 = space.singleton("s2").unwrap();
        let s13 = space.event_from_names(["s1", "s3"]).unwrap();
        assert!(pi_mutually_exclusive(&p, &s1, &s2).unwrap());
        assert!(!pi_mutually_exclusive(&p, &s1, &s1).unwrap());
        assert!(!pi_mutually_exclusive(&p, &s1, &s13).unwrap());
    }

    /// The two implementations of the relation agree on every event pair of
    /// every profile with up to four states and levels up to 3.
    #[test]
    fn discrimax_equals_likelihood_exhaustively() {
        for n in 1..=4usize {
            let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
            let space = StateSpace::new(names).unwrap();
            let events = all_events_canonical(&space);
            for levels in level_assignments(n, 3) {
                let Ok(p) = PossibilityProfile::new(&space, levels) else {
                    continue;
                };
                for a in &events {
                    for b in &events {
                        assert_eq!(
                            likelihood_compare(&p, a, b).unwrap(),
                            discrimax_compare(&p, a, b).unwrap(),
                            "profile {:?}, a={a}, b={b}",
                            p.levels()
                        );
                    }
                }
            }
        }
    }

    /// Strictly higher necessity or strictly higher possibility both force a
    /// strict likelihood verdict.
    #[test]
    fn likelihood_refines_necessity_and_possibility() {
        for n in 1..=4usize {
            let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
            let space = StateSpace::new(names).unwrap();
            let events = all_events_canonical(&space);
            for levels in level_assignments(n, 3) {
                let Ok(p) = PossibilityProfile::new(&space, levels) else {
                    continue;
                };
                for a in &events {
                    for b in &events {
                        let lik = likelihood_compare(&p, a, b).unwrap();
                        if p.compare_necessity(a, b).unwrap().is_strict() {
                            assert!(lik.is_strict());
                        }
                        if p.compare_possibility(a, b).unwrap().is_strict() {
                            assert!(lik.is_strict());
                        }
                    }
                }
            }
        }
    }

    /// There are pairs where necessity (resp. possibility) ties but the
    /// likelihood verdict is strict: the refinement is proper.
    #[test]
    fn refinement_is_strict_somewhere() {
        let (space, p) = setup();
        let s13 = space.event_from_names(["s1", "s3"]).unwrap();
        let s1 = space.singleton("s1").unwrap();
        assert_eq!(
            p.compare_necessity(&s13, &s1).unwrap(),
            Comparison::Equivalent
        );
        assert_eq!(
            p.compare_possibility(&s13, &s1).unwrap(),
            Comparison::Equivalent
        );
        assert_eq!(
            likelihood_compare(&p, &s13, &s1).unwrap(),
            Comparison::Greater
        );
    }

    #[test]
    fn autoduality_and_difference_form() {
        for n in 1..=4usize {
            let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
            let space = StateSpace::new(names).unwrap();
            let events = all_events_canonical(&space);
            for levels in level_assignments(n, 3) {
                let Ok(p) = PossibilityProfile::new(&space, levels) else {
                    continue;
                };
                for a in &events {
                    for b in &events {
                        let ab = likelihood_compare(&p, a, b).unwrap();
                        // complementation swaps the verdict
                        assert_eq!(
                            ab,
                            likelihood_compare(&p, &a.complement(), &b.complement())
                                .unwrap()
                                .reverse()
                        );
                        // comparing the differences directly changes nothing
                        assert_eq!(
                            ab,
                            likelihood_compare(&p, &a.difference(b), &b.difference(a)).unwrap()
                        );
                    }
                }
            }
        }
    }

    /// When two events are possibility-exclusive the likelihood verdict is
    /// the plain possibility verdict.
    #[test]
    fn exclusive_pairs_collapse_to_possibility() {
        for n in 1..=4usize {
            let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
            let space = StateSpace::new(names).unwrap();
            let events = all_events_canonical(&space);
            for levels in level_assignments(n, 3) {
                let Ok(p) = PossibilityProfile::new(&space, levels) else {
                    continue;
                };
                for a in &events {
                    for b in &events {
                        if pi_mutually_exclusive(&p, a, b).unwrap() {
                            assert_eq!(
                                likelihood_compare(&p, a, b).unwrap(),
                                p.compare_possibility(a, b).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn indifference_is_not_transitive() {
        let (space, p) = setup();
        let a = space.singleton("s1").unwrap();
        let b = space.singleton("s2").unwrap();
        let c = space.event_from_names(["s1", "s3"]).unwrap();
        assert!(likelihood_compare(&p, &a, &b).unwrap().is_equivalent());
        assert!(likelihood_compare(&p, &b, &c).unwrap().is_equivalent());
        assert_eq!(likelihood_compare(&p, &c, &a).unwrap(), Comparison::Greater);
    }

    #[test]
    fn relation_object_matches_free_function() {
        let (space, p) = setup();
        let rel = LikelihoodRelation::new(p.clone());
        let a = space.event_from_names(["s1", "s3"]).unwrap();
        let b = space.singleton("s2").unwrap();
        assert_eq!(
            rel.compare_events(&a, &b).unwrap(),
            likelihood_compare(&p, &a, &b).unwrap()
        );
        // and it is a genuinely different relation from plain possibility
        let cmp = UncertaintyComparator::Possibility(p.clone());
        let s13 = space.event_from_names(["s1", "s3"]).unwrap();
        let s1 = space.singleton("s1").unwrap();
        assert_eq!(cmp.compare(&s13, &s1).unwrap(), Comparison::Equivalent);
        assert_eq!(rel.compare_events(&s13, &s1).unwrap(), Comparison::Greater);
    }
}
