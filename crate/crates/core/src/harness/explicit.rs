//! Explicit event-relation tables: a verdict (or a gap) for every ordered
//! pair of events of a small space, and the axiom checks for the two
//! uncertainty-relation families.

use super::{Budget, CheckOutcome, CheckReport, Claim, SearchBounds, Witness};
use crate::comparison::Comparison;
use crate::error::{Error, Result};
use crate::ordinal::{all_events_canonical, Event, StateSpace};
use crate::uncertainty::EventOrdering;

/// A relation given extensionally. Mirror consistency and an equivalent
/// diagonal are maintained by construction; pairs may be left incomparable.
#[derive(Debug, Clone)]
pub struct ExplicitRelation {
    space: StateSpace,
    verdicts: Vec<Option<Comparison>>, // (a_mask << n | ...) row-major by mask
}

impl ExplicitRelation {
    /// An empty table: only the diagonal is filled (with equivalence).
    pub fn new(space: &StateSpace) -> Self {
        let size = 1usize << space.len();
        let mut verdicts = vec![None; size * size];
        for m in 0..size {
            verdicts[m * size + m] = Some(Comparison::Equivalent);
        }
        ExplicitRelation {
            space: space.clone(),
            verdicts,
        }
    }

    /// Tabulate a complete ordering.
    pub fn from_ordering<E: EventOrdering>(ordering: &E) -> Result<Self> {
        let space = ordering.state_space().clone();
        let mut rel = ExplicitRelation::new(&space);
        let events = all_events_canonical(&space);
        for a in &events {
            for b in &events {
                rel.set(a, b, ordering.compare_events(a, b)?)?;
            }
        }
        Ok(rel)
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    fn size(&self) -> usize {
        1usize << self.space.len()
    }

    fn index(&self, a: &Event, b: &Event) -> Result<usize> {
        if !self.space.same_space(a.space()) || !self.space.same_space(b.space()) {
            return Err(Error::MismatchedStateSpace);
        }
        Ok(a.mask() as usize * self.size() + b.mask() as usize)
    }

    /// Record a verdict; the mirror entry is kept consistent. Re-setting a
    /// diagonal entry to anything but equivalence is rejected.
    pub fn set(&mut self, a: &Event, b: &Event, verdict: Comparison) -> Result<()> {
        if a.mask() == b.mask() && verdict != Comparison::Equivalent {
            return Err(Error::Internal(
                "an event cannot compare non-equivalent to itself".into(),
            ));
        }
        let ij = self.index(a, b)?;
        let ji = self.index(b, a)?;
        self.verdicts[ij] = Some(verdict);
        self.verdicts[ji] = Some(verdict.reverse());
        Ok(())
    }

    /// Forget a verdict (and its mirror), leaving the pair incomparable.
    pub fn unset(&mut self, a: &Event, b: &Event) -> Result<()> {
        if a.mask() == b.mask() {
            return Err(Error::Internal("the diagonal is always equivalent".into()));
        }
        let ij = self.index(a, b)?;
        let ji = self.index(b, a)?;
        self.verdicts[ij] = None;
        self.verdicts[ji] = None;
        Ok(())
    }

    pub fn verdict(&self, a: &Event, b: &Event) -> Result<Option<Comparison>> {
        Ok(self.verdicts[self.index(a, b)?])
    }

    pub fn is_complete(&self) -> bool {
        self.verdicts.iter().all(Option::is_some)
    }
}

impl EventOrdering for ExplicitRelation {
    fn state_space(&self) -> &StateSpace {
        &self.space
    }

    fn compare_events(&self, a: &Event, b: &Event) -> Result<Comparison> {
        self.verdict(a, b)?.ok_or(Error::IncomparablePair)
    }
}

/// The two axiom families an explicit uncertainty relation can be checked
/// against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomFamily {
    /// Complete, transitive, non-trivial, faithful, and additive over
    /// disjoint unions.
    QualitativeProbability,
    /// Complete, transitive, non-trivial, faithful, and monotone under
    /// intersection.
    NecessityOrdering,
}

impl AxiomFamily {
    pub fn name(self) -> &'static str {
        match self {
            AxiomFamily::QualitativeProbability => "qualitative-probability",
            AxiomFamily::NecessityOrdering => "necessity-ordering",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "qualitative-probability" | "qualprob" => Some(AxiomFamily::QualitativeProbability),
            "necessity-ordering" | "necessity" => Some(AxiomFamily::NecessityOrdering),
            _ => None,
        }
    }
}

/// Verify the chosen axiom family on a complete explicit table. An
/// incomplete table is an input error for both families.
pub fn check_axioms_of_relation(
    rel: &ExplicitRelation,
    family: AxiomFamily,
) -> Result<CheckReport> {
    if !rel.is_complete() {
        return Err(Error::IncomparablePair);
    }
    let n = rel.space().len();
    let bounds = SearchBounds {
        max_states: n,
        ..SearchBounds::default()
    };
    let mut budget = Budget::new(&bounds)?;
    let events = all_events_canonical(rel.space());
    let ne = events.len() as u64;
    let property = format!("relation-axioms ({})", family.name());
    let fail = |details: String, claims: Vec<Claim>, instances: u64| CheckReport {
        property: format!("relation-axioms ({})", family.name()),
        bounds,
        instances,
        outcome: CheckOutcome::Counterexample(Witness { details, claims }),
    };
    let claim = |a: &Event, b: &Event, allowed: Vec<Comparison>| Claim::Explicit {
        relation: rel.clone(),
        a: a.clone(),
        b: b.clone(),
        allowed,
    };

    // non-triviality and faithfulness over pairs
    budget.charge(ne * ne)?;
    let full = rel.space().full_event();
    let empty = rel.space().empty_event();
    if rel.compare_events(&full, &empty)? != Comparison::Greater {
        return Ok(fail(
            "the sure event must be strictly above the impossible one".into(),
            vec![claim(
                &full,
                &empty,
                vec![Comparison::Less, Comparison::Equivalent],
            )],
            budget.used(),
        ));
    }
    for a in &events {
        if rel.compare_events(a, &empty)? == Comparison::Less {
            return Ok(fail(
                format!("event below the impossible one: A = {a}"),
                vec![claim(a, &empty, vec![Comparison::Less])],
                budget.used(),
            ));
        }
        for b in &events {
            if a.is_subset_of(b) && rel.compare_events(a, b)? == Comparison::Greater {
                return Ok(fail(
                    format!("faithfulness violated: {a} is a subset of {b} yet compares above it"),
                    vec![claim(a, b, vec![Comparison::Greater])],
                    budget.used(),
                ));
            }
        }
    }

    // transitivity of the weak relation
    budget.charge(ne * ne * ne)?;
    for a in &events {
        for b in &events {
            if !rel.compare_events(a, b)?.is_weak_ge() {
                continue;
            }
            for c in &events {
                if rel.compare_events(b, c)?.is_weak_ge() && !rel.compare_events(a, c)?.is_weak_ge()
                {
                    return Ok(fail(
                        format!("transitivity violated on A = {a}, B = {b}, C = {c}"),
                        vec![
                            claim(a, b, vec![Comparison::Greater, Comparison::Equivalent]),
                            claim(b, c, vec![Comparison::Greater, Comparison::Equivalent]),
                            claim(a, c, vec![Comparison::Less]),
                        ],
                        budget.used(),
                    ));
                }
            }
        }
    }

    // family axiom
    budget.charge(ne * ne * ne)?;
    match family {
        AxiomFamily::QualitativeProbability => {
            for a in &events {
                for b in &events {
                    for c in &events {
                        if !a.intersection(&b.union(c)).is_empty() {
                            continue;
                        }
                        let plain = rel.compare_events(b, c)?;
                        let shifted = rel.compare_events(&a.union(b), &a.union(c))?;
                        if plain != shifted {
                            return Ok(fail(
                                format!(
                                    "additivity violated: A = {a}, B = {b}, C = {c} ({plain} vs {shifted})"
                                ),
                                vec![
                                    claim(b, c, vec![plain]),
                                    claim(&a.union(b), &a.union(c), vec![plain]),
                                ],
                                budget.used(),
                            ));
                        }
                    }
                }
            }
        }
        AxiomFamily::NecessityOrdering => {
            for b in &events {
                for c in &events {
                    if !rel.compare_events(b, c)?.is_weak_ge() {
                        continue;
                    }
                    for a in &events {
                        let lhs = a.intersection(b);
                        let rhs = a.intersection(c);
                        if !rel.compare_events(&lhs, &rhs)?.is_weak_ge() {
                            return Ok(fail(
                                format!(
                                    "intersection monotony violated: A = {a}, B = {b}, C = {c}"
                                ),
                                vec![
                                    claim(b, c, vec![Comparison::Greater, Comparison::Equivalent]),
                                    claim(&lhs, &rhs, vec![Comparison::Less]),
                                ],
                                budget.used(),
                            ));
                        }
                    }
                }
            }
        }
    }

    Ok(CheckReport {
        property,
        bounds,
        instances: budget.used(),
        outcome: CheckOutcome::Pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::likelihood::LikelihoodRelation;
    use crate::uncertainty::{PossibilityProfile, UncertaintyComparator};

    #[test]
    fn condorcet_weights_satisfy_qualitative_probability() {
        let fx = fixtures::condorcet();
        let cmp = UncertaintyComparator::QualitativeProbability(fx.weights.clone());
        let rel = ExplicitRelation::from_ordering(&cmp).unwrap();
        let report = check_axioms_of_relation(&rel, AxiomFamily::QualitativeProbability).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn necessity_table_satisfies_the_necessity_axioms() {
        let space = StateSpace::new(["s1", "s2"]).unwrap();
        let p = PossibilityProfile::new(&space, vec![2, 1]).unwrap();
        let rel = ExplicitRelation::from_ordering(&UncertaintyComparator::Necessity(p)).unwrap();
        let report = check_axioms_of_relation(&rel, AxiomFamily::NecessityOrdering).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn faithfulness_violation_is_reported_with_the_pair() {
        let space = StateSpace::new(["s1", "s2"]).unwrap();
        let p = PossibilityProfile::new(&space, vec![2, 1]).unwrap();
        let mut rel =
            ExplicitRelation::from_ordering(&UncertaintyComparator::Necessity(p)).unwrap();
        let a = space.singleton("s1").unwrap();
        let full = space.full_event();
        rel.set(&a, &full, Comparison::Greater).unwrap();
        let report = check_axioms_of_relation(&rel, AxiomFamily::NecessityOrdering).unwrap();
        let w = report.witness().expect("violation found");
        assert!(w.details.contains("faithfulness"));
        assert!(w.reverify().unwrap());
    }

    #[test]
    fn incomplete_tables_are_rejected() {
        let space = StateSpace::new(["s1", "s2"]).unwrap();
        let rel = ExplicitRelation::new(&space);
        assert!(!rel.is_complete());
        assert_eq!(
            check_axioms_of_relation(&rel, AxiomFamily::QualitativeProbability).unwrap_err(),
            Error::IncomparablePair
        );
    }

    #[test]
    fn lifting_a_partial_relation_is_rejected() {
        let space = StateSpace::new(["s1", "s2"]).unwrap();
        let scale = crate::ordinal::OutcomeScale::new([("x", 1), ("y", 0)]).unwrap();
        let rel = ExplicitRelation::new(&space);
        let f = crate::ordinal::Act::constant(&space, &scale, "x").unwrap();
        let g = crate::ordinal::Act::new(&space, &scale, [("s1", "x"), ("s2", "y")]).unwrap();
        assert_eq!(
            crate::lifting::lift_compare(&rel, &f, &g).unwrap_err(),
            Error::IncomparablePair
        );
    }

    #[test]
    fn mirror_entries_stay_consistent() {
        let space = StateSpace::new(["s1", "s2"]).unwrap();
        let mut rel = ExplicitRelation::new(&space);
        let a = space.singleton("s1").unwrap();
        let b = space.singleton("s2").unwrap();
        rel.set(&a, &b, Comparison::Greater).unwrap();
        assert_eq!(rel.verdict(&b, &a).unwrap(), Some(Comparison::Less));
        rel.unset(&a, &b).unwrap();
        assert_eq!(rel.verdict(&b, &a).unwrap(), None);
        assert!(rel.set(&a, &a, Comparison::Greater).is_err());
    }

    #[test]
    fn likelihood_relation_is_not_transitive_hence_not_qualprob() {
        // indifference cycles break weak transitivity, so the likelihood
        // table must fail the qualitative-probability axioms
        let space = StateSpace::new(["s1", "s2", "s3"]).unwrap();
        let p = PossibilityProfile::new(&space, vec![2, 2, 1]).unwrap();
        let rel = ExplicitRelation::from_ordering(&LikelihoodRelation::new(p)).unwrap();
        let report = check_axioms_of_relation(&rel, AxiomFamily::QualitativeProbability).unwrap();
        let w = report.witness().expect("transitivity defect expected");
        assert!(w.details.contains("transitivity"), "{w}");
        assert!(w.reverify().unwrap());
    }
}
