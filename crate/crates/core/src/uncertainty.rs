//! Comparative uncertainty on events: possibility and necessity orderings
//! induced by a per-state plausibility profile, qualitative probability
//! induced by rational weights, and the comparator abstraction shared by
//! every lifting rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::comparison::Comparison;
use crate::error::{Error, Result};
use crate::ordinal::{Event, StateSpace};

/// Ordinal plausibility level of a state. Level 0 is the distinguished
/// bottom: a state at level 0 is impossible, and the possibility of the
/// empty event is 0 by definition.
pub type Level = u8;

/// Per-state ordinal plausibility levels over a state space.
///
/// At least one state must sit above level 0; the all-zero profile would
/// make the whole space as implausible as the empty event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PossibilityProfile {
    space: StateSpace,
    levels: Vec<Level>,
}

impl PossibilityProfile {
    pub fn new(space: &StateSpace, levels: Vec<Level>) -> Result<Self> {
        if levels.len() != space.len() {
            return Err(Error::Internal(format!(
                "profile has {} levels for {} states",
                levels.len(),
                space.len()
            )));
        }
        if levels.iter().all(|&l| l == 0) {
            return Err(Error::TrivialProfile);
        }
        Ok(PossibilityProfile {
            space: space.clone(),
            levels,
        })
    }

    pub fn from_named<'a, I>(space: &StateSpace, levels: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, Level)>,
    {
        let mut vec = vec![0; space.len()];
        for (name, level) in levels {
            let idx = space
                .index_of(name)
                .ok_or_else(|| Error::UnknownState(name.to_string()))?;
            vec[idx] = level;
        }
        PossibilityProfile::new(space, vec)
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn level(&self, state: usize) -> Level {
        self.levels[state]
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn max_level(&self) -> Level {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    /// True when every state sits above level 0, i.e. every nonempty event
    /// is strictly more possible than the empty one.
    pub fn is_positive(&self) -> bool {
        self.levels.iter().all(|&l| l > 0)
    }

    fn check_event(&self, event: &Event) -> Result<()> {
        if self.space.same_space(event.space()) {
            Ok(())
        } else {
            Err(Error::MismatchedStateSpace)
        }
    }

    /// Possibility of an event: the maximum level over its members, 0 for
    /// the empty event.
    pub fn possibility_of(&self, event: &Event) -> Result<Level> {
        self.check_event(event)?;
        Ok(self.possibility_of_mask(event.mask()))
    }

    pub(crate) fn possibility_of_mask(&self, mask: u64) -> Level {
        let mut best = 0;
        for (i, &level) in self.levels.iter().enumerate() {
            if mask >> i & 1 == 1 && level > best {
                best = level;
            }
        }
        best
    }

    pub fn compare_possibility(&self, a: &Event, b: &Event) -> Result<Comparison> {
        self.check_event(a)?;
        self.check_event(b)?;
        Ok(Comparison::from_ord(
            self.possibility_of_mask(a.mask())
                .cmp(&self.possibility_of_mask(b.mask())),
        ))
    }

    /// Necessity ordering via duality: `a` is at least as certain as `b`
    /// exactly when the complement of `a` is at most as possible as the
    /// complement of `b`.
    pub fn compare_necessity(&self, a: &Event, b: &Event) -> Result<Comparison> {
        Ok(self
            .compare_possibility(&a.complement(), &b.complement())?
            .reverse())
    }

    /// A null event is as implausible as the empty event: all members at
    /// level 0. The empty event is always null.
    pub fn is_null_event(&self, event: &Event) -> Result<bool> {
        self.check_event(event)?;
        Ok(self.possibility_of_mask(event.mask()) == 0)
    }
}

/// Per-state nonnegative rational weights with positive total. Only sum
/// comparisons are exposed: the induced relation on events is comparative,
/// never a numeric probability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    space: StateSpace,
    weights: Vec<BigRational>,
}

impl WeightProfile {
    pub fn new(space: &StateSpace, weights: Vec<BigRational>) -> Result<Self> {
        if weights.len() != space.len() {
            return Err(Error::InvalidWeights(format!(
                "{} weights for {} states",
                weights.len(),
                space.len()
            )));
        }
        if weights.iter().any(|w| w < &BigRational::zero()) {
            return Err(Error::InvalidWeights("weights must be nonnegative".into()));
        }
        let total: BigRational = weights.iter().sum();
        if total.is_zero() {
            return Err(Error::InvalidWeights(
                "total weight must be positive".into(),
            ));
        }
        Ok(WeightProfile {
            space: space.clone(),
            weights,
        })
    }

    pub fn from_integers(space: &StateSpace, weights: &[i64]) -> Result<Self> {
        WeightProfile::new(
            space,
            weights
                .iter()
                .map(|&w| BigRational::from_integer(BigInt::from(w)))
                .collect(),
        )
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn weight(&self, state: usize) -> &BigRational {
        &self.weights[state]
    }

    fn check_event(&self, event: &Event) -> Result<()> {
        if self.space.same_space(event.space()) {
            Ok(())
        } else {
            Err(Error::MismatchedStateSpace)
        }
    }

    /// Exact sum of the weights of an event's members.
    pub fn weight_of(&self, event: &Event) -> Result<BigRational> {
        self.check_event(event)?;
        let mut sum = BigRational::zero();
        for i in event.member_indices() {
            sum += &self.weights[i];
        }
        Ok(sum)
    }

    pub fn compare(&self, a: &Event, b: &Event) -> Result<Comparison> {
        Ok(Comparison::from_ord(
            self.weight_of(a)?.cmp(&self.weight_of(b)?),
        ))
    }
}

/// Anything that yields a comparison verdict for a pair of events of one
/// state space. Lifting rules are generic over this.
pub trait EventOrdering {
    fn state_space(&self) -> &StateSpace;

    fn compare_events(&self, a: &Event, b: &Event) -> Result<Comparison>;
}

/// The three built-in complete comparators on events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UncertaintyComparator {
    /// Compare by certainty: verdicts follow the necessity ordering of the
    /// profile (duality with possibility over complements).
    Necessity(PossibilityProfile),
    /// Compare by possibility: verdicts follow the maximum level reached.
    Possibility(PossibilityProfile),
    /// Compare by exact weight sums.
    QualitativeProbability(WeightProfile),
}

impl UncertaintyComparator {
    pub fn space(&self) -> &StateSpace {
        match self {
            UncertaintyComparator::Necessity(p) | UncertaintyComparator::Possibility(p) => {
                p.space()
            }
            UncertaintyComparator::QualitativeProbability(w) => w.space(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            UncertaintyComparator::Necessity(_) => "necessity",
            UncertaintyComparator::Possibility(_) => "possibility",
            UncertaintyComparator::QualitativeProbability(_) => "qualitative-probability",
        }
    }

    pub fn compare(&self, a: &Event, b: &Event) -> Result<Comparison> {
        match self {
            UncertaintyComparator::Necessity(p) => p.compare_necessity(a, b),
            UncertaintyComparator::Possibility(p) => p.compare_possibility(a, b),
            UncertaintyComparator::QualitativeProbability(w) => w.compare(a, b),
        }
    }
}

impl EventOrdering for UncertaintyComparator {
    fn state_space(&self) -> &StateSpace {
        self.space()
    }

    fn compare_events(&self, a: &Event, b: &Event) -> Result<Comparison> {
        self.compare(a, b)
    }
}
