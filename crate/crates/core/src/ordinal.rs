//! Foundational types: state spaces, events, outcome scales, acts, and the
//! agreement-set computations every comparison rule consumes.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Preference rank of a consequence. Ranks are ordinal: the engine only
/// ever compares them, never adds or scales them.
pub type Rank = u32;

const MAX_STATES: usize = 64;

#[derive(Debug)]
struct SpaceInner {
    names: Vec<String>,
}

/// A finite, ordered set of named states. The declaration order is the
/// canonical enumeration order used for all deterministic output.
///
/// Cheap to clone; all values built over a space share it.
#[derive(Debug, Clone)]
pub struct StateSpace {
    inner: Arc<SpaceInner>,
}

impl StateSpace {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyStateSpace);
        }
        if names.len() > MAX_STATES {
            return Err(Error::TooManyStates(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyStateName);
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateStateName(name.clone()));
            }
        }
        Ok(StateSpace {
            inner: Arc::new(SpaceInner { names }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one state
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.inner.names.iter().map(String::as_str)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.inner.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    /// The event containing no states.
    pub fn empty_event(&self) -> Event {
        Event {
            space: self.clone(),
            mask: 0,
        }
    }

    /// The event containing every state.
    pub fn full_event(&self) -> Event {
        Event {
            space: self.clone(),
            mask: self.full_mask(),
        }
    }

    pub fn singleton(&self, name: &str) -> Result<Event> {
        let idx = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))?;
        Ok(Event {
            space: self.clone(),
            mask: 1 << idx,
        })
    }

    pub fn event_from_names<'a, I>(&self, names: I) -> Result<Event>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut mask = 0u64;
        for name in names {
            let idx = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownState(name.to_string()))?;
            mask |= 1 << idx;
        }
        Ok(Event {
            space: self.clone(),
            mask,
        })
    }

    /// Event from a bit mask over state indices (bit `i` = state `i`).
    pub fn event_from_mask(&self, mask: u64) -> Event {
        debug_assert_eq!(mask & !self.full_mask(), 0);
        Event {
            space: self.clone(),
            mask: mask & self.full_mask(),
        }
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.len() == MAX_STATES {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    pub fn same_space(&self, other: &StateSpace) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl PartialEq for StateSpace {
    fn eq(&self, other: &Self) -> bool {
        self.same_space(other)
    }
}

impl Eq for StateSpace {}

/// A subset of a [`StateSpace`], stored as a bit mask in state order.
#[derive(Debug, Clone)]
pub struct Event {
    space: StateSpace,
    mask: u64,
}

impl Event {
    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.mask >> index & 1 == 1
    }

    pub fn contains(&self, name: &str) -> bool {
        match self.space.index_of(name) {
            Some(idx) => self.contains_index(idx),
            None => false,
        }
    }

    /// Member state indices in canonical (declaration) order.
    pub fn member_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.space.len()).filter(|i| self.contains_index(*i))
    }

    /// Member state names in canonical order.
    pub fn members(&self) -> impl Iterator<Item = &str> {
        self.member_indices().map(|i| self.space.name(i))
    }

    fn check_same(&self, other: &Event) {
        assert!(
            self.space.same_space(&other.space),
            "event set operation across different state spaces"
        );
    }

    pub fn complement(&self) -> Event {
        Event {
            space: self.space.clone(),
            mask: !self.mask & self.space.full_mask(),
        }
    }

    pub fn union(&self, other: &Event) -> Event {
        self.check_same(other);
        Event {
            space: self.space.clone(),
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &Event) -> Event {
        self.check_same(other);
        Event {
            space: self.space.clone(),
            mask: self.mask & other.mask,
        }
    }

    /// States in `self` but not in `other`.
    pub fn difference(&self, other: &Event) -> Event {
        self.check_same(other);
        Event {
            space: self.space.clone(),
            mask: self.mask & !other.mask,
        }
    }

    pub fn symmetric_difference(&self, other: &Event) -> Event {
        self.check_same(other);
        Event {
            space: self.space.clone(),
            mask: self.mask ^ other.mask,
        }
    }

    pub fn is_subset_of(&self, other: &Event) -> bool {
        self.check_same(other);
        self.mask & !other.mask == 0
    }

    pub fn is_disjoint_from(&self, other: &Event) -> bool {
        self.check_same(other);
        self.mask & other.mask == 0
    }

    /// Canonical set literal, e.g. `{s1,s3}`; `{}` for the empty event.
    pub fn to_set_literal(&self) -> String {
        let mut out = String::from("{");
        for (k, name) in self.members().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(name);
        }
        out.push('}');
        out
    }
}

impl PartialEq for Event {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_space(&other.space) && self.mask == other.mask
    }
}

impl Eq for Event {}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_set_literal())
    }
}

/// All events of a space in canonical order: subsets ordered
/// lexicographically by their member list in state order, so
/// `{} < {s1} < {s1,s2} < ... < {s2} < ...`.
pub fn all_events_canonical(space: &StateSpace) -> Vec<Event> {
    let n = space.len();
    let mut masks: Vec<u64> = (0..(1u64 << n)).collect();
    masks.sort_by(|a, b| {
        let la: Vec<usize> = (0..n).filter(|i| a >> i & 1 == 1).collect();
        let lb: Vec<usize> = (0..n).filter(|i| b >> i & 1 == 1).collect();
        la.cmp(&lb)
    });
    masks
        .into_iter()
        .map(|m| space.event_from_mask(m))
        .collect()
}

#[derive(Debug)]
struct ScaleInner {
    names: Vec<String>,
    ranks: Vec<Rank>,
}

/// Consequence names with ordinal ranks; a complete preorder on the
/// consequence set. A higher rank is a more preferred consequence.
/// Ranks carry no magnitude: any strictly increasing re-ranking induces
/// the same preference relation and the same agreement sets.
#[derive(Debug, Clone)]
pub struct OutcomeScale {
    inner: Arc<ScaleInner>,
}

impl OutcomeScale {
    pub fn new<I, S>(consequences: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Rank)>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut ranks = Vec::new();
        for (name, rank) in consequences {
            let name = name.into();
            if names.contains(&name) {
                return Err(Error::DuplicateConsequenceName(name));
            }
            names.push(name);
            ranks.push(rank);
        }
        let mut distinct: Vec<Rank> = ranks.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() < 2 {
            return Err(Error::DegenerateScale);
        }
        Ok(OutcomeScale {
            inner: Arc::new(ScaleInner { names, ranks }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.inner.names.iter().map(String::as_str)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.inner.names[index]
    }

    pub fn rank(&self, index: usize) -> Rank {
        self.inner.ranks[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    pub fn rank_of(&self, name: &str) -> Result<Rank> {
        self.index_of(name)
            .map(|i| self.inner.ranks[i])
            .ok_or_else(|| Error::UnknownConsequence(name.to_string()))
    }

    pub fn same_scale(&self, other: &OutcomeScale) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.names == other.inner.names && self.inner.ranks == other.inner.ranks)
    }

    /// Ordered pairs (best, worse) of consequence indices with strictly
    /// decreasing rank, in canonical index order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.rank(x) > self.rank(y) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

impl PartialEq for OutcomeScale {
    fn eq(&self, other: &Self) -> bool {
        self.same_scale(other)
    }
}

impl Eq for OutcomeScale {}

/// A total map from the states of a space to the consequences of a scale.
#[derive(Debug, Clone)]
pub struct Act {
    space: StateSpace,
    scale: OutcomeScale,
    image: Vec<u16>, // consequence index per state, in state order
}

impl Act {
    /// Build an act from `(state, consequence)` assignments. Every state
    /// must be assigned exactly once.
    pub fn new<'a, I>(space: &StateSpace, scale: &OutcomeScale, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut image: Vec<Option<u16>> = vec![None; space.len()];
        for (state, outcome) in assignments {
            let si = space
                .index_of(state)
                .ok_or_else(|| Error::UnknownState(state.to_string()))?;
            let ci = scale
                .index_of(outcome)
                .ok_or_else(|| Error::UnknownConsequence(outcome.to_string()))?;
            image[si] = Some(ci as u16);
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| Error::MissingAssignment(space.name(i).to_string())))
            .collect::<Result<Vec<u16>>>()?;
        Ok(Act {
            space: space.clone(),
            scale: scale.clone(),
            image,
        })
    }

    /// Build an act directly from consequence indices in state order.
    pub fn from_outcome_indices(
        space: &StateSpace,
        scale: &OutcomeScale,
        image: Vec<u16>,
    ) -> Result<Self> {
        if image.len() != space.len() {
            return Err(Error::MissingAssignment(
                space.name(image.len().min(space.len() - 1)).to_string(),
            ));
        }
        if let Some(bad) = image.iter().find(|&&c| usize::from(c) >= scale.len()) {
            return Err(Error::UnknownConsequence(format!("#{bad}")));
        }
        Ok(Act {
            space: space.clone(),
            scale: scale.clone(),
            image,
        })
    }

    /// The act giving consequence `outcome` in every state.
    pub fn constant(space: &StateSpace, scale: &OutcomeScale, outcome: &str) -> Result<Self> {
        let ci = scale
            .index_of(outcome)
            .ok_or_else(|| Error::UnknownConsequence(outcome.to_string()))?;
        Ok(Act {
            space: space.clone(),
            scale: scale.clone(),
            image: vec![ci as u16; space.len()],
        })
    }

    /// The two-consequence act giving `best` on `on` and `worse` elsewhere.
    /// `best` must rank strictly above `worse`.
    pub fn two_outcome(on: &Event, scale: &OutcomeScale, best: &str, worse: &str) -> Result<Self> {
        let bi = scale
            .index_of(best)
            .ok_or_else(|| Error::UnknownConsequence(best.to_string()))?;
        let wi = scale
            .index_of(worse)
            .ok_or_else(|| Error::UnknownConsequence(worse.to_string()))?;
        if scale.rank(bi) <= scale.rank(wi) {
            return Err(Error::RankOrder {
                best: best.to_string(),
                worse: worse.to_string(),
            });
        }
        let space = on.space();
        let image = (0..space.len())
            .map(|i| {
                if on.contains_index(i) {
                    bi as u16
                } else {
                    wi as u16
                }
            })
            .collect();
        Ok(Act {
            space: space.clone(),
            scale: scale.clone(),
            image,
        })
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn scale(&self) -> &OutcomeScale {
        &self.scale
    }

    /// Consequence index at a state index.
    pub fn outcome_index(&self, state: usize) -> usize {
        usize::from(self.image[state])
    }

    pub fn outcome_name(&self, state: usize) -> &str {
        self.scale.name(self.outcome_index(state))
    }

    pub fn rank_at(&self, state: usize) -> Rank {
        self.scale.rank(self.outcome_index(state))
    }

    /// Consequence indices appearing in the image of this act, deduplicated,
    /// in canonical index order.
    pub fn outcome_indices_used(&self) -> Vec<usize> {
        let mut used = vec![false; self.scale.len()];
        for &c in &self.image {
            used[usize::from(c)] = true;
        }
        (0..self.scale.len()).filter(|&i| used[i]).collect()
    }

    /// The set of states from which this act leads to the consequence with
    /// the given scale index.
    pub fn preimage(&self, outcome_index: usize) -> Event {
        let mut mask = 0u64;
        for (i, &c) in self.image.iter().enumerate() {
            if usize::from(c) == outcome_index {
                mask |= 1 << i;
            }
        }
        self.space.event_from_mask(mask)
    }

    fn check_comparable(&self, other: &Act) -> Result<()> {
        if !self.space.same_space(&other.space) {
            return Err(Error::MismatchedStateSpace);
        }
        if !self.scale.same_scale(&other.scale) {
            return Err(Error::MismatchedScale);
        }
        Ok(())
    }

    /// The event `[self >= other]`: states where this act does at least as
    /// well as the other.
    pub fn agreement_set(&self, other: &Act) -> Result<Event> {
        self.check_comparable(other)?;
        let mut mask = 0u64;
        for i in 0..self.image.len() {
            if self.rank_at(i) >= other.rank_at(i) {
                mask |= 1 << i;
            }
        }
        Ok(self.space.event_from_mask(mask))
    }

    /// The event `[self > other]`: states where this act does strictly
    /// better than the other.
    pub fn strict_agreement_set(&self, other: &Act) -> Result<Event> {
        self.check_comparable(other)?;
        let mut mask = 0u64;
        for i in 0..self.image.len() {
            if self.rank_at(i) > other.rank_at(i) {
                mask |= 1 << i;
            }
        }
        Ok(self.space.event_from_mask(mask))
    }

    /// States where the two acts give equally ranked consequences.
    pub fn tie_set(&self, other: &Act) -> Result<Event> {
        self.check_comparable(other)?;
        let mut mask = 0u64;
        for i in 0..self.image.len() {
            if self.rank_at(i) == other.rank_at(i) {
                mask |= 1 << i;
            }
        }
        Ok(self.space.event_from_mask(mask))
    }

    /// The composite act equal to `self` on `on` and to `other` elsewhere.
    pub fn splice(&self, on: &Event, other: &Act) -> Result<Act> {
        self.check_comparable(other)?;
        if !self.space.same_space(on.space()) {
            return Err(Error::MismatchedStateSpace);
        }
        let image = (0..self.image.len())
            .map(|i| {
                if on.contains_index(i) {
                    self.image[i]
                } else {
                    other.image[i]
                }
            })
            .collect();
        Ok(Act {
            space: self.space.clone(),
            scale: self.scale.clone(),
            image,
        })
    }
}

impl PartialEq for Act {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_space(&other.space)
            && self.scale.same_scale(&other.scale)
            && self.image == other.image
    }
}

impl Eq for Act {}

impl fmt::Display for Act {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.image.len() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", self.space.name(i), self.outcome_name(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn state_space_rejects_bad_input() {
        assert_eq!(
            StateSpace::new(Vec::<String>::new()),
            Err(Error::EmptyStateSpace)
        );
        assert_eq!(
            StateSpace::new(["a", "a"]).unwrap_err(),
            Error::DuplicateStateName("a".into())
        );
        assert_eq!(
            StateSpace::new(["a", ""]).unwrap_err(),
            Error::EmptyStateName
        );
    }

    #[test]
    fn scale_needs_two_distinct_ranks() {
        assert_eq!(
            OutcomeScale::new([("x", 1), ("y", 1)]).unwrap_err(),
            Error::DegenerateScale
        );
        assert!(OutcomeScale::new([("x", 1), ("y", 0)]).is_ok());
    }

    #[test]
    fn event_algebra_stays_in_space() {
        let space = StateSpace::new(["s1", "s2", "s3"]).unwrap();
        let a = space.event_from_names(["s1", "s3"]).unwrap();
        let b = space.event_from_names(["s1", "s2"]).unwrap();
        assert_eq!(a.union(&b), space.full_event());
        assert_eq!(a.intersection(&b), space.singleton("s1").unwrap());
        assert_eq!(a.difference(&b), space.singleton("s3").unwrap());
        assert_eq!(
            a.symmetric_difference(&b),
            space.event_from_names(["s2", "s3"]).unwrap()
        );
        assert_eq!(a.complement(), space.singleton("s2").unwrap());
        assert_eq!(a.to_set_literal(), "{s1,s3}");
        assert_eq!(space.empty_event().to_set_literal(), "{}");
    }

    #[test]
    fn canonical_event_order_is_member_list_lex() {
        let space = StateSpace::new(["s1", "s2", "s3"]).unwrap();
        let lits: Vec<String> = all_events_canonical(&space)
            .iter()
            .map(Event::to_set_literal)
            .collect();
        assert_eq!(
            lits,
            vec![
                "{}",
                "{s1}",
                "{s1,s2}",
                "{s1,s2,s3}",
                "{s1,s3}",
                "{s2}",
                "{s2,s3}",
                "{s3}"
            ]
        );
    }

    #[test]
    fn condorcet_agreement_sets_match_known_values() {
        let fx = fixtures::condorcet();
        let f = fx.act("f");
        let g = fx.act("g");
        let h = fx.act("h");
        assert_eq!(
            f.agreement_set(g).unwrap(),
            fx.space.event_from_names(["s1", "s2", "s4"]).unwrap()
        );
        assert_eq!(
            g.agreement_set(f).unwrap(),
            fx.space.event_from_names(["s3", "s5", "s6"]).unwrap()
        );
        assert_eq!(
            g.agreement_set(h).unwrap(),
            fx.space.event_from_names(["s1", "s3", "s6"]).unwrap()
        );
        assert_eq!(
            f.agreement_set(h).unwrap(),
            fx.space.event_from_names(["s1", "s2", "s3"]).unwrap()
        );
        // this pair has no ties, so the strict set coincides with the weak one
        assert_eq!(
            g.strict_agreement_set(h).unwrap(),
            g.agreement_set(h).unwrap()
        );
    }

    #[test]
    fn agreement_with_self_is_everything() {
        let fx = fixtures::omelette();
        let bio = fx.act("BIO");
        assert_eq!(bio.agreement_set(bio).unwrap(), fx.space.full_event());
        assert_eq!(
            bio.strict_agreement_set(bio).unwrap(),
            fx.space.empty_event()
        );
    }

    #[test]
    fn omelette_agreement_sets_single_out_fresh() {
        let fx = fixtures::omelette();
        let bio = fx.act("BIO");
        let bac = fx.act("BAC");
        let ta = fx.act("TA");
        let fresh = fx.space.singleton("fresh").unwrap();
        assert_eq!(bio.agreement_set(bac).unwrap(), fresh);
        assert_eq!(bio.agreement_set(ta).unwrap(), fresh);
        assert_eq!(bac.agreement_set(ta).unwrap(), fresh);
        assert_eq!(bio.strict_agreement_set(bac).unwrap(), fresh);
    }

    #[test]
    fn splice_boundary_cases() {
        let fx = fixtures::omelette();
        let bio = fx.act("BIO");
        let ta = fx.act("TA");
        let everything = fx.space.full_event();
        let nothing = fx.space.empty_event();
        assert_eq!(bio.splice(&everything, ta).unwrap(), *bio);
        assert_eq!(bio.splice(&nothing, ta).unwrap(), *ta);

        let fresh = fx.space.singleton("fresh").unwrap();
        let spliced = bio.splice(&fresh, ta).unwrap();
        assert_eq!(fx.scale.rank_of(spliced.outcome_name(0)).unwrap(), 6);
        assert_eq!(fx.scale.rank_of(spliced.outcome_name(1)).unwrap(), 4);
    }

    #[test]
    fn constant_acts_compare_by_rank() {
        let space = StateSpace::new(["s1", "s2"]).unwrap();
        let scale = OutcomeScale::new([("x", 3), ("y", 1)]).unwrap();
        let fx = Act::constant(&space, &scale, "x").unwrap();
        let fy = Act::constant(&space, &scale, "y").unwrap();
        assert_eq!(fx.agreement_set(&fy).unwrap(), space.full_event());
        assert_eq!(fy.agreement_set(&fx).unwrap(), space.empty_event());
    }

    #[test]
    fn two_outcome_act_requires_strict_rank_gap() {
        let space = StateSpace::new(["s1", "s2"]).unwrap();
        let scale = OutcomeScale::new([("x", 3), ("y", 1)]).unwrap();
        let a = space.singleton("s1").unwrap();
        assert!(Act::two_outcome(&a, &scale, "x", "y").is_ok());
        assert!(matches!(
            Act::two_outcome(&a, &scale, "y", "x"),
            Err(Error::RankOrder { .. })
        ));
        assert!(matches!(
            Act::two_outcome(&a, &scale, "x", "x"),
            Err(Error::RankOrder { .. })
        ));

        let all = space.full_event();
        let none = space.empty_event();
        assert_eq!(
            Act::two_outcome(&all, &scale, "x", "y").unwrap(),
            Act::constant(&space, &scale, "x").unwrap()
        );
        assert_eq!(
            Act::two_outcome(&none, &scale, "x", "y").unwrap(),
            Act::constant(&space, &scale, "y").unwrap()
        );
    }

    #[test]
    fn two_outcome_agreement_is_union_with_complement() {
        // [w(A) >= w(B)] = A u ~B for every event pair, whatever (x, y).
        let space = StateSpace::new(["s1", "s2", "s3"]).unwrap();
        let scale = OutcomeScale::new([("x", 2), ("y", 0)]).unwrap();
        for a in all_events_canonical(&space) {
            for b in all_events_canonical(&space) {
                let wa = Act::two_outcome(&a, &scale, "x", "y").unwrap();
                let wb = Act::two_outcome(&b, &scale, "x", "y").unwrap();
                assert_eq!(
                    wa.agreement_set(&wb).unwrap(),
                    a.union(&b.complement()),
                    "A={a} B={b}"
                );
            }
        }
    }

    #[test]
    fn mismatched_spaces_are_rejected() {
        let s1 = StateSpace::new(["a", "b"]).unwrap();
        let s2 = StateSpace::new(["a", "c"]).unwrap();
        let scale = OutcomeScale::new([("x", 1), ("y", 0)]).unwrap();
        let f = Act::constant(&s1, &scale, "x").unwrap();
        let g = Act::constant(&s2, &scale, "x").unwrap();
        assert_eq!(
            f.agreement_set(&g).unwrap_err(),
            Error::MismatchedStateSpace
        );
    }
}
