//! Built-in worked examples: Savage's omelette problem and a Condorcet-style
//! cycle under comparative probability. The demos, tests, and benchmarks
//! all draw on these.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::ordinal::{Act, OutcomeScale, StateSpace};
use crate::uncertainty::{PossibilityProfile, WeightProfile};

/// A ready-made decision problem: a space, a scale, named acts, and the
/// uncertainty information that comes with the example.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub space: StateSpace,
    pub scale: OutcomeScale,
    acts: Vec<(String, Act)>,
    pi_levels: Option<Vec<u8>>,
    pub weights: WeightProfile,
}

impl Fixture {
    pub fn act(&self, name: &str) -> &Act {
        &self
            .acts
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("fixture has no act named {name}"))
            .1
    }

    pub fn named_acts(&self) -> Vec<(String, Act)> {
        self.acts.clone()
    }

    pub fn act_names(&self) -> Vec<String> {
        self.acts.iter().map(|(n, _)| n.clone()).collect()
    }

    fn two_state_profile(&self, levels: [u8; 2]) -> PossibilityProfile {
        assert_eq!(
            self.space.len(),
            2,
            "plausibility regimes exist for the two-state fixture"
        );
        PossibilityProfile::new(&self.space, levels.to_vec()).expect("non-trivial levels")
    }

    /// The fixture's own plausibility levels, when it carries any.
    pub fn default_profile(&self) -> Option<PossibilityProfile> {
        self.pi_levels
            .clone()
            .map(|levels| PossibilityProfile::new(&self.space, levels).expect("non-trivial levels"))
    }

    /// Omelette regime: the first state clearly more plausible.
    pub fn profile_fresh_likely(&self) -> PossibilityProfile {
        self.two_state_profile([2, 1])
    }

    /// Omelette regime: the second state clearly more plausible.
    pub fn profile_rotten_likely(&self) -> PossibilityProfile {
        self.two_state_profile([1, 2])
    }

    /// Omelette regime: complete ignorance, both states fully plausible.
    pub fn profile_equal(&self) -> PossibilityProfile {
        self.two_state_profile([1, 1])
    }
}

/// Savage's omelette: should a sixth egg, possibly rotten, be broken into
/// the omelette (BIO), broken apart in a cup (BAC), or thrown away (TA)?
/// Consequence ranks follow the classical table, 6 best to 1 worst.
pub fn omelette() -> Fixture {
    let space = StateSpace::new(["fresh", "rotten"]).expect("valid space");
    let scale = OutcomeScale::new([
        ("six-egg-omelette", 6),
        ("six-egg-omelette-cup", 5),
        ("five-egg-omelette", 4),
        ("five-egg-omelette-cup", 3),
        ("five-egg-omelette-spoiled", 2),
        ("nothing-to-eat", 1),
    ])
    .expect("valid scale");
    let act = |fresh: &str, rotten: &str| {
        Act::new(&space, &scale, [("fresh", fresh), ("rotten", rotten)]).expect("valid act")
    };
    let acts = vec![
        ("BIO".to_string(), act("six-egg-omelette", "nothing-to-eat")),
        (
            "BAC".to_string(),
            act("six-egg-omelette-cup", "five-egg-omelette-cup"),
        ),
        (
            "TA".to_string(),
            act("five-egg-omelette-spoiled", "five-egg-omelette"),
        ),
    ];
    let weights = WeightProfile::from_integers(&space, &[1, 1]).expect("valid weights");
    Fixture {
        space,
        scale,
        acts,
        pi_levels: Some(vec![2, 1]),
        weights,
    }
}

/// Six states with weights 2,1,1,2,1,2 (ninths) and three acts whose
/// pairwise lifted comparisons cycle: each act beats the next on total
/// weight 5/9 to 4/9. Consequences are named by their utility figures;
/// only the rank order matters.
pub fn condorcet() -> Fixture {
    let space = StateSpace::new(["s1", "s2", "s3", "s4", "s5", "s6"]).expect("valid space");
    // distinct utility figures from the cycle table, ranked by value
    let values = [-40i32, -25, -15, -10, 0, 5, 10, 20, 40, 100];
    let scale = OutcomeScale::new(
        values
            .iter()
            .enumerate()
            .map(|(rank, v)| (v.to_string(), rank as u32)),
    )
    .expect("valid scale");
    let mk = |vals: [i32; 6]| {
        let pairs: Vec<(String, String)> = vals
            .iter()
            .enumerate()
            .map(|(i, v)| (space.name(i).to_string(), v.to_string()))
            .collect();
        Act::new(
            &space,
            &scale,
            pairs.iter().map(|(s, c)| (s.as_str(), c.as_str())),
        )
        .expect("valid act")
    };
    let acts = vec![
        ("f".to_string(), mk([5, 100, 0, 0, -10, -10])),
        ("g".to_string(), mk([0, -15, 100, -10, 0, 10])),
        ("h".to_string(), mk([-25, 0, -40, 20, 40, 0])),
    ];
    let weights = WeightProfile::new(
        &space,
        [2, 1, 1, 2, 1, 2]
            .iter()
            .map(|&w| BigRational::new(BigInt::from(w), BigInt::from(9)))
            .collect(),
    )
    .expect("valid weights");
    Fixture {
        space,
        scale,
        acts,
        pi_levels: None,
        weights,
    }
}
