//! Exhaustive small-model verification: sweeps every profile, scale, and
//! act tuple within explicit bounds, checks the order axioms and derived
//! properties, and reports either a pass or a re-verifiable counterexample.
//!
//! Determinism contract: all enumeration follows canonical orders (state
//! declaration order, lexicographic level/rank/image vectors, member-list
//! order on events), so the first witness is schedule-independent.

pub mod enumerate;
pub mod event_props;
pub mod explicit;
pub mod roundtrip;
pub mod rules;
pub mod savage;
pub mod search;

pub use event_props::{check_event_properties, likelihood_suite};
pub use explicit::{check_axioms_of_relation, AxiomFamily, ExplicitRelation};
pub use roundtrip::{check_representation_roundtrip, check_roundtrip_on};
pub use rules::{
    check_acceptance_closure, check_duality_self_test, check_system_p, system_p_suite,
    system_p_suite_on,
};
pub use savage::{
    check_lift_forms, check_p1prime, check_p1prime_on, check_p3_p4_u, check_sure_thing,
    check_unanimity, savage_suite, LiftRule,
};
pub use search::{search_counterexample, SearchProperty};

use std::fmt;

use crate::comparison::Comparison;
use crate::error::{Error, Result};
use crate::lifting;
use crate::likelihood::likelihood_compare;
use crate::nonmonotonic::{self, RuleVerdict};
use crate::ordinal::{Act, Event, OutcomeScale};
use crate::uncertainty::{Level, PossibilityProfile, UncertaintyComparator};

/// Default ceiling on the number of enumerated instances per check.
pub const DEFAULT_CEILING: u64 = 10_000_000;

/// Bounds for exhaustive sweeps and searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest state-space size; sweeps run every size from 1 up to this.
    pub max_states: usize,
    /// Largest plausibility level; levels range over 0..=max_levels.
    pub max_levels: Level,
    /// Number of consequences and the exclusive bound on their ranks.
    pub max_ranks: u32,
    /// Largest tuple of acts examined at once by searches.
    pub max_acts: usize,
    /// Hard cap on enumerated instances per check; exceeding it is an
    /// error, never a silent truncation.
    pub ceiling: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_states: 3,
            max_levels: 3,
            max_ranks: 3,
            max_acts: 3,
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl SearchBounds {
    pub fn validate(&self) -> Result<()> {
        if self.max_states == 0 {
            return Err(Error::InvalidBounds("max_states must be at least 1".into()));
        }
        if self.max_levels == 0 {
            return Err(Error::InvalidBounds("max_levels must be at least 1".into()));
        }
        if self.max_ranks < 2 {
            return Err(Error::InvalidBounds(
                "max_ranks must be at least 2 to allow a non-degenerate scale".into(),
            ));
        }
        if self.max_acts == 0 {
            return Err(Error::InvalidBounds("max_acts must be at least 1".into()));
        }
        if self.max_states > 16 {
            return Err(Error::InvalidBounds(
                "max_states above 16 cannot be enumerated exhaustively".into(),
            ));
        }
        if self.ceiling == 0 {
            return Err(Error::InvalidBounds("ceiling must be positive".into()));
        }
        Ok(())
    }
}

impl fmt::Display for SearchBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "states<={}, levels<={}, ranks<={}, acts<={}, ceiling={}",
            self.max_states, self.max_levels, self.max_ranks, self.max_acts, self.ceiling
        )
    }
}

/// Incremental instance accountant. Every enumerated case is charged
/// before it is examined; running out of budget aborts the check instead
/// of truncating it.
pub(crate) struct Budget {
    ceiling: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(bounds: &SearchBounds) -> Result<Self> {
        bounds.validate()?;
        Ok(Budget {
            ceiling: bounds.ceiling,
            used: 0,
        })
    }

    pub(crate) fn charge(&mut self, n: u64) -> Result<()> {
        let next = self.used.saturating_add(n);
        if next > self.ceiling {
            return Err(Error::CeilingExceeded {
                ceiling: self.ceiling,
            });
        }
        self.used = next;
        Ok(())
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

/// One re-checkable assertion about a concrete instance. A witness is a
/// bundle of these plus a human-readable dump; re-verification replays
/// every claim through the public operations.
#[derive(Debug, Clone)]
pub enum Claim {
    /// The lifted verdict on `(f, g)` is one of `allowed`.
    Lift {
        cmp: UncertaintyComparator,
        f: Act,
        g: Act,
        allowed: Vec<Comparison>,
    },
    /// The conditional verdict on `(f, g)` given an event is one of `allowed`.
    Conditional {
        profile: PossibilityProfile,
        f: Act,
        g: Act,
        given: Event,
        allowed: Vec<Comparison>,
    },
    /// The likelihood verdict on `(a, b)` is one of `allowed`.
    Likelihood {
        profile: PossibilityProfile,
        a: Event,
        b: Event,
        allowed: Vec<Comparison>,
    },
    /// The comparator verdict on `(a, b)` is one of `allowed`.
    Comparator {
        cmp: UncertaintyComparator,
        a: Event,
        b: Event,
        allowed: Vec<Comparison>,
    },
    /// Splicing `f` and `g` over `on` with the two continuations yields
    /// different lifted verdicts.
    LiftedSplicesDiffer {
        cmp: UncertaintyComparator,
        f: Act,
        g: Act,
        h1: Act,
        h2: Act,
        on: Event,
    },
    /// Two lifted comparisons disagree (used by the round-trip check).
    LiftVerdictsDiffer {
        cmp1: UncertaintyComparator,
        f1: Act,
        g1: Act,
        cmp2: UncertaintyComparator,
        f2: Act,
        g2: Act,
    },
    /// Event comparison through two-consequence acts reports a dependence
    /// on the chosen consequence pair.
    EventCompareDependsOnPair {
        cmp: UncertaintyComparator,
        scale: OutcomeScale,
        a: Event,
        b: Event,
    },
    /// Nonmonotonic entailment of `b` in context `a` has the given value.
    NmEntails {
        profile: PossibilityProfile,
        a: Event,
        b: Event,
        expect: bool,
    },
    /// A rule verdict re-verifies against its defining inequalities.
    Rule {
        profile: PossibilityProfile,
        verdict: RuleVerdict,
    },
    /// The likelihood/entailment bridge self-test has the given value.
    Duality {
        profile: PossibilityProfile,
        a: Event,
        b: Event,
        expect: bool,
    },
    /// An explicit relation's verdict on `(a, b)` is one of `allowed`.
    Explicit {
        relation: ExplicitRelation,
        a: Event,
        b: Event,
        allowed: Vec<Comparison>,
    },
}

impl Claim {
    pub fn holds(&self) -> Result<bool> {
        Ok(match self {
            Claim::Lift { cmp, f, g, allowed } => {
                allowed.contains(&lifting::lift_compare(cmp, f, g)?)
            }
            Claim::Conditional {
                profile,
                f,
                g,
                given,
                allowed,
            } => allowed.contains(&lifting::lift_compare_conditional(profile, f, g, given)?),
            Claim::Likelihood {
                profile,
                a,
                b,
                allowed,
            } => allowed.contains(&likelihood_compare(profile, a, b)?),
            Claim::Comparator { cmp, a, b, allowed } => allowed.contains(&cmp.compare(a, b)?),
            Claim::LiftedSplicesDiffer {
                cmp,
                f,
                g,
                h1,
                h2,
                on,
            } => {
                let v1 = lifting::lift_compare(cmp, &f.splice(on, h1)?, &g.splice(on, h1)?)?;
                let v2 = lifting::lift_compare(cmp, &f.splice(on, h2)?, &g.splice(on, h2)?)?;
                v1 != v2
            }
            Claim::LiftVerdictsDiffer {
                cmp1,
                f1,
                g1,
                cmp2,
                f2,
                g2,
            } => lifting::lift_compare(cmp1, f1, g1)? != lifting::lift_compare(cmp2, f2, g2)?,
            Claim::EventCompareDependsOnPair { cmp, scale, a, b } => {
                let (best, worse) = first_strict_pair(scale)?;
                matches!(
                    lifting::event_compare_via_acts(cmp, scale, a, b, best, worse),
                    Err(Error::Internal(_))
                )
            }
            Claim::NmEntails {
                profile,
                a,
                b,
                expect,
            } => nonmonotonic::nm_entails(profile, a, b)? == *expect,
            Claim::Rule { profile, verdict } => verdict.reverify(profile)?,
            Claim::Duality {
                profile,
                a,
                b,
                expect,
            } => nonmonotonic::likelihood_from_nm_duality(profile, a, b)? == *expect,
            Claim::Explicit {
                relation,
                a,
                b,
                allowed,
            } => match relation.verdict(a, b)? {
                Some(v) => allowed.contains(&v),
                None => false,
            },
        })
    }
}

fn first_strict_pair(scale: &OutcomeScale) -> Result<(&str, &str)> {
    scale
        .strict_pairs()
        .first()
        .map(|&(x, y)| (scale.name(x), scale.name(y)))
        .ok_or(Error::DegenerateScale)
}

/// A concrete instance found by a check or search: a printable dump plus
/// the claims that make it re-checkable.
#[derive(Debug, Clone)]
pub struct Witness {
    pub details: String,
    pub claims: Vec<Claim>,
}

impl Witness {
    /// Replay every claim through the public operations.
    pub fn reverify(&self) -> Result<bool> {
        for claim in &self.claims {
            if !claim.holds()? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.details)
    }
}

#[derive(Debug, Clone)]
pub enum CheckOutcome {
    /// The property held on every enumerated instance.
    Pass,
    /// The property failed; the witness re-verifies.
    Counterexample(Witness),
    /// A search found what it was looking for; the witness re-verifies.
    WitnessFound(Witness),
    /// A search exhausted its bounds without finding anything.
    Exhausted,
}

/// Result of one property check or search.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub property: String,
    pub bounds: SearchBounds,
    pub instances: u64,
    pub outcome: CheckOutcome,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, CheckOutcome::Pass)
    }

    pub fn found(&self) -> bool {
        matches!(self.outcome, CheckOutcome::WitnessFound(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            CheckOutcome::Counterexample(w) | CheckOutcome::WitnessFound(w) => Some(w),
            _ => None,
        }
    }

    /// One-line summary; the witness dump follows separately when present.
    pub fn headline(&self) -> String {
        match &self.outcome {
            CheckOutcome::Pass => {
                format!("PASS  {} ({} instances)", self.property, self.instances)
            }
            CheckOutcome::Counterexample(_) => format!(
                "COUNTEREXAMPLE  {} (after {} instances)",
                self.property, self.instances
            ),
            CheckOutcome::WitnessFound(_) => format!(
                "WITNESS  {} (after {} instances)",
                self.property, self.instances
            ),
            CheckOutcome::Exhausted => format!(
                "EXHAUSTED  {} ({} instances, nothing found)",
                self.property, self.instances
            ),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.headline())?;
        if let Some(w) = self.witness() {
            for line in w.details.lines() {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn describe_profile(profile: &PossibilityProfile) -> String {
    let parts: Vec<String> = (0..profile.space().len())
        .map(|i| format!("{}:{}", profile.space().name(i), profile.level(i)))
        .collect();
    format!("pi[{}]", parts.join(", "))
}

pub(crate) fn describe_scale(scale: &OutcomeScale) -> String {
    let parts: Vec<String> = (0..scale.len())
        .map(|i| format!("{}:{}", scale.name(i), scale.rank(i)))
        .collect();
    format!("ranks[{}]", parts.join(", "))
}

pub(crate) fn describe_act(name: &str, act: &Act) -> String {
    format!("{name} = {act}")
}
