//! Property-based invariants over randomly generated spaces, scales,
//! profiles, and acts.

use proptest::prelude::*;

use ordec_core::likelihood::likelihood_compare;
use ordec_core::nonmonotonic::likelihood_from_nm_duality;
use ordec_core::ordinal::{Act, Event, OutcomeScale, StateSpace};
use ordec_core::{Comparison, PossibilityProfile, UncertaintyComparator, WeightProfile};

#[derive(Debug, Clone)]
struct Model {
    space: StateSpace,
    scale: OutcomeScale,
    levels: Vec<u8>,
    weights: Vec<i64>,
    act_images: Vec<Vec<u16>>,
    event_masks: Vec<u64>,
}

fn model_strategy() -> impl Strategy<Value = Model> {
    (1usize..=5, 2usize..=4).prop_flat_map(|(n, k)| {
        let acts = prop::collection::vec(prop::collection::vec(0u16..k as u16, n), 3);
        let events = prop::collection::vec(0u64..(1u64 << n), 3);
        let levels = prop::collection::vec(0u8..=3, n);
        let weights = prop::collection::vec(0i64..=4, n);
        let ranks = prop::collection::vec(0u32..6, k);
        (Just((n, k)), acts, events, levels, weights, ranks).prop_filter_map(
            "degenerate model",
            |((n, k), act_images, event_masks, levels, weights, ranks)| {
                let space = StateSpace::new((1..=n).map(|i| format!("s{i}"))).expect("valid space");
                let scale = OutcomeScale::new(
                    ranks
                        .iter()
                        .enumerate()
                        .map(|(i, &r)| (format!("x{}", i + 1), r)),
                )
                .ok()?;
                if levels.iter().all(|&l| l == 0) {
                    return None;
                }
                if weights.iter().all(|&w| w == 0) {
                    return None;
                }
                let _ = k;
                Some(Model {
                    space,
                    scale,
                    levels,
                    weights,
                    act_images,
                    event_masks,
                })
            },
        )
    })
}

impl Model {
    fn profile(&self) -> PossibilityProfile {
        PossibilityProfile::new(&self.space, self.levels.clone()).expect("non-trivial levels")
    }

    fn weight_profile(&self) -> WeightProfile {
        WeightProfile::from_integers(&self.space, &self.weights).expect("positive total")
    }

    fn act(&self, i: usize) -> Act {
        Act::from_outcome_indices(&self.space, &self.scale, self.act_images[i].clone())
            .expect("image indices in range")
    }

    fn event(&self, i: usize) -> Event {
        self.space.event_from_mask(self.event_masks[i])
    }
}

/// A strictly increasing re-ranking of the scale.
fn monotone_rerank(scale: &OutcomeScale, gaps: &[u32]) -> OutcomeScale {
    let mut distinct: Vec<u32> = (0..scale.len()).map(|i| scale.rank(i)).collect();
    distinct.sort_unstable();
    distinct.dedup();
    // old rank -> new rank, preserving strict order with arbitrary gaps
    let mut new_rank = std::collections::BTreeMap::new();
    let mut acc = 0u32;
    for (pos, &r) in distinct.iter().enumerate() {
        acc += 1 + gaps[pos % gaps.len()];
        new_rank.insert(r, acc);
    }
    OutcomeScale::new(
        (0..scale.len()).map(|i| (scale.name(i).to_string(), new_rank[&scale.rank(i)])),
    )
    .expect("re-ranking keeps distinctness")
}

proptest! {
    /// Agreement sets are untouched by strictly monotone re-rankings.
    #[test]
    fn agreement_sets_are_ordinal(model in model_strategy(), gaps in prop::collection::vec(0u32..5, 4)) {
        let f = model.act(0);
        let g = model.act(1);
        let rescaled = monotone_rerank(&model.scale, &gaps);
        let f2 = Act::from_outcome_indices(&model.space, &rescaled, model.act_images[0].clone()).unwrap();
        let g2 = Act::from_outcome_indices(&model.space, &rescaled, model.act_images[1].clone()).unwrap();
        prop_assert_eq!(
            f.agreement_set(&g).unwrap().mask(),
            f2.agreement_set(&g2).unwrap().mask()
        );
        prop_assert_eq!(
            f.strict_agreement_set(&g).unwrap().mask(),
            f2.strict_agreement_set(&g2).unwrap().mask()
        );
    }

    /// The two strict sets and the tie set partition the space, and the
    /// complement of the weak set is the opposing strict set.
    #[test]
    fn agreement_sets_partition_the_space(model in model_strategy()) {
        let f = model.act(0);
        let g = model.act(1);
        let fg = f.strict_agreement_set(&g).unwrap();
        let gf = g.strict_agreement_set(&f).unwrap();
        let ties = f.tie_set(&g).unwrap();
        prop_assert!(fg.is_disjoint_from(&gf));
        prop_assert!(fg.is_disjoint_from(&ties));
        prop_assert!(gf.is_disjoint_from(&ties));
        prop_assert_eq!(fg.union(&gf).union(&ties), model.space.full_event());
        prop_assert_eq!(f.agreement_set(&g).unwrap(), fg.union(&ties));
        prop_assert_eq!(f.agreement_set(&g).unwrap().complement(), gf);
    }

    /// Splicing restricted to either side reproduces the donor act.
    #[test]
    fn splice_restricts_to_its_donors(model in model_strategy()) {
        let f = model.act(0);
        let h = model.act(1);
        let on = model.event(0);
        let spliced = f.splice(&on, &h).unwrap();
        for s in 0..model.space.len() {
            if on.contains_index(s) {
                prop_assert_eq!(spliced.outcome_index(s), f.outcome_index(s));
            } else {
                prop_assert_eq!(spliced.outcome_index(s), h.outcome_index(s));
            }
        }
    }

    /// Faithfulness of all three comparators: a subset never strictly
    /// beats its superset.
    #[test]
    fn comparators_respect_inclusion(model in model_strategy()) {
        let a = model.event(0);
        let b = a.union(&model.event(1));
        for cmp in [
            UncertaintyComparator::Necessity(model.profile()),
            UncertaintyComparator::Possibility(model.profile()),
            UncertaintyComparator::QualitativeProbability(model.weight_profile()),
        ] {
            prop_assert!(cmp.compare(&a, &b).unwrap() != Comparison::Greater);
        }
    }

    /// Likelihood autoduality and the difference form, on random pairs.
    #[test]
    fn likelihood_duality(model in model_strategy()) {
        let p = model.profile();
        let a = model.event(0);
        let b = model.event(1);
        let ab = likelihood_compare(&p, &a, &b).unwrap();
        prop_assert_eq!(
            ab,
            likelihood_compare(&p, &a.complement(), &b.complement()).unwrap().reverse()
        );
        prop_assert_eq!(
            ab,
            likelihood_compare(&p, &a.difference(&b), &b.difference(&a)).unwrap()
        );
    }

    /// The symmetric-difference bridge between likelihood and entailment.
    #[test]
    fn duality_self_test(model in model_strategy()) {
        let p = model.profile();
        prop_assert!(likelihood_from_nm_duality(&p, &model.event(0), &model.event(1)).unwrap());
    }

    /// Weight-sum additivity over random disjoint unions.
    #[test]
    fn weight_additivity(model in model_strategy()) {
        let wp = model.weight_profile();
        let b = model.event(1);
        let c = model.event(2);
        let a = model.event(0).difference(&b.union(&c));
        prop_assert_eq!(
            wp.compare(&b, &c).unwrap(),
            wp.compare(&a.union(&b), &a.union(&c)).unwrap()
        );
    }
}
