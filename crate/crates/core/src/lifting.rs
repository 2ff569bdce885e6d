//! Act comparison by lifting an event ordering: `f` is at least as good as
//! `g` when the event "f does at least as well as g" is at least as likely
//! as its mirror image. Also: conditional preference, pairwise preference
//! matrices, event comparison through two-consequence acts, and the
//! consequence-side lifting rule with a pessimistic or optimistic reading.

use std::fmt;

use crate::comparison::Comparison;
use crate::error::{Error, Result};
use crate::ordinal::{Act, Event, OutcomeScale, Rank};
use crate::uncertainty::{EventOrdering, PossibilityProfile};

/// Compare two acts by lifting the given event ordering: the verdict on
/// `(f, g)` is the ordering's verdict on `([f >= g], [g >= f])`.
///
/// Any complete event ordering can be lifted. For a necessity comparator
/// the result equals comparing the possibilities of the strict agreement
/// sets, which is how conditioning is computed.
pub fn lift_compare<E: EventOrdering>(ordering: &E, f: &Act, g: &Act) -> Result<Comparison> {
    if !ordering.state_space().same_space(f.space()) {
        return Err(Error::MismatchedStateSpace);
    }
    let f_side = f.agreement_set(g)?;
    let g_side = g.agreement_set(f)?;
    ordering.compare_events(&f_side, &g_side)
}

/// Conditional preference on an event: compare the possibilities of the
/// strict agreement sets restricted to `given`. Equivalent to splicing both
/// acts with an arbitrary common continuation outside `given` and lifting
/// the necessity comparator, and to the necessity comparison of the weak
/// agreement sets united with the complement of `given`.
///
/// On a null event every pair of acts is equivalent.
pub fn lift_compare_conditional(
    profile: &PossibilityProfile,
    f: &Act,
    g: &Act,
    given: &Event,
) -> Result<Comparison> {
    if !profile.space().same_space(f.space()) || !profile.space().same_space(given.space()) {
        return Err(Error::MismatchedStateSpace);
    }
    let f_strict = f.strict_agreement_set(g)?;
    let g_strict = g.strict_agreement_set(f)?;
    profile.compare_possibility(&f_strict.intersection(given), &g_strict.intersection(given))
}

/// Pairwise verdicts for a list of named acts, in declaration order.
#[derive(Debug, Clone)]
pub struct PreferenceMatrix {
    names: Vec<String>,
    verdicts: Vec<Comparison>, // row-major n*n
}

impl PreferenceMatrix {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn verdict(&self, row: usize, col: usize) -> Comparison {
        self.verdicts[row * self.names.len() + col]
    }

    /// First cycle of the strict relation in canonical order, as a list of
    /// act indices `i1, ..., ik` with `i1 > i2 > ... > ik > i1`, if any.
    pub fn strict_cycle(&self) -> Option<Vec<usize>> {
        // DFS over the strict-preference digraph, visiting vertices and
        // successors in index order so the answer is canonical
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        fn visit(
            m: &PreferenceMatrix,
            v: usize,
            mark: &mut [Mark],
            path: &mut Vec<usize>,
        ) -> Option<Vec<usize>> {
            mark[v] = Mark::Active;
            path.push(v);
            for w in 0..m.len() {
                if !m.verdict(v, w).is_strict() {
                    continue;
                }
                match mark[w] {
                    Mark::Active => {
                        let start = path.iter().position(|&x| x == w).unwrap();
                        return Some(path[start..].to_vec());
                    }
                    Mark::New => {
                        if let Some(cycle) = visit(m, w, mark, path) {
                            return Some(cycle);
                        }
                    }
                    Mark::Done => {}
                }
            }
            path.pop();
            mark[v] = Mark::Done;
            None
        }
        let n = self.names.len();
        let mut mark = vec![Mark::New; n];
        let mut path = Vec::new();
        for root in 0..n {
            if mark[root] == Mark::New {
                if let Some(cycle) = visit(self, root, &mut mark, &mut path) {
                    return Some(cycle);
                }
            }
        }
        None
    }
}

impl fmt::Display for PreferenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.names.iter().map(String::len).max().unwrap_or(1).max(1);
        write!(f, "{:width$}", "")?;
        for name in &self.names {
            write!(f, " {name:>width$}")?;
        }
        writeln!(f)?;
        for i in 0..self.len() {
            write!(f, "{:width$}", self.names[i])?;
            for j in 0..self.len() {
                write!(f, " {:>width$}", self.verdict(i, j).symbol())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Build the full pairwise matrix for named acts under a lifted ordering.
pub fn preference_matrix<E: EventOrdering>(
    ordering: &E,
    acts: &[(String, Act)],
) -> Result<PreferenceMatrix> {
    for (i, (name, _)) in acts.iter().enumerate() {
        if acts[..i].iter().any(|(m, _)| m == name) {
            return Err(Error::DuplicateActName(name.clone()));
        }
    }
    let n = acts.len();
    let mut verdicts = vec![Comparison::Equivalent; n * n];
    for i in 0..n {
        for j in 0..n {
            verdicts[i * n + j] = if i == j {
                Comparison::Equivalent
            } else {
                lift_compare(ordering, &acts[i].1, &acts[j].1)?
            };
        }
    }
    Ok(PreferenceMatrix {
        names: acts.iter().map(|(n, _)| n.clone()).collect(),
        verdicts,
    })
}

/// Pairwise matrix under the consequence-side rule.
pub fn consequence_preference_matrix<E: EventOrdering>(
    ordering: &E,
    acts: &[(String, Act)],
    attitude: Attitude,
) -> Result<PreferenceMatrix> {
    for (i, (name, _)) in acts.iter().enumerate() {
        if acts[..i].iter().any(|(m, _)| m == name) {
            return Err(Error::DuplicateActName(name.clone()));
        }
    }
    let n = acts.len();
    let mut verdicts = vec![Comparison::Equivalent; n * n];
    for i in 0..n {
        for j in 0..n {
            verdicts[i * n + j] = if i == j {
                Comparison::Equivalent
            } else {
                consequence_lift_compare(ordering, &acts[i].1, &acts[j].1, attitude)?
            };
        }
    }
    Ok(PreferenceMatrix {
        names: acts.iter().map(|(n, _)| n.clone()).collect(),
        verdicts,
    })
}

/// Compare two events by comparing the two-consequence acts they induce:
/// best consequence on the event, worse one elsewhere. The verdict does not
/// depend on which strictly ranked pair `(best, worse)` is chosen; this is
/// re-verified across every eligible pair of the scale and a violation is
/// reported as an internal error.
pub fn event_compare_via_acts<E: EventOrdering>(
    ordering: &E,
    scale: &OutcomeScale,
    a: &Event,
    b: &Event,
    best: &str,
    worse: &str,
) -> Result<Comparison> {
    let wa = Act::two_outcome(a, scale, best, worse)?;
    let wb = Act::two_outcome(b, scale, best, worse)?;
    let verdict = lift_compare(ordering, &wa, &wb)?;
    for (x, y) in scale.strict_pairs() {
        let wa2 = Act::two_outcome(a, scale, scale.name(x), scale.name(y))?;
        let wb2 = Act::two_outcome(b, scale, scale.name(x), scale.name(y))?;
        let other = lift_compare(ordering, &wa2, &wb2)?;
        if other != verdict {
            return Err(Error::Internal(format!(
                "event comparison depends on the consequence pair: ({}, {}) gives {}, ({}, {}) gives {}",
                best,
                worse,
                verdict,
                scale.name(x),
                scale.name(y),
                other
            )));
        }
    }
    Ok(verdict)
}

/// Attitude for the consequence-side lifting rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attitude {
    /// Judge acts by the worst consequence they reach at least as surely.
    Pessimistic,
    /// Judge acts by the best consequence they reach at least as surely.
    Optimistic,
}

/// One side of the consequence-side rule: the consequences (scale indices)
/// that `d1` reaches at least as surely as `d2`, restricted to consequences
/// occurring in either act's range.
pub fn surely_reached_consequences<E: EventOrdering>(
    ordering: &E,
    d1: &Act,
    d2: &Act,
) -> Result<Vec<usize>> {
    if !ordering.state_space().same_space(d1.space()) {
        return Err(Error::MismatchedStateSpace);
    }
    if !d1.space().same_space(d2.space()) {
        return Err(Error::MismatchedStateSpace);
    }
    if !d1.scale().same_scale(d2.scale()) {
        return Err(Error::MismatchedScale);
    }
    let mut domain = d1.outcome_indices_used();
    for c in d2.outcome_indices_used() {
        if !domain.contains(&c) {
            domain.push(c);
        }
    }
    domain.sort_unstable();
    let mut reached = Vec::new();
    for c in domain {
        let e1 = d1.preimage(c);
        let e2 = d2.preimage(c);
        if ordering.compare_events(&e1, &e2)?.is_weak_ge() {
            reached.push(c);
        }
    }
    Ok(reached)
}

/// Compare two acts through the consequences they reach at least as surely
/// as one another, judged pessimistically (compare the worst ranks) or
/// optimistically (compare the best ranks). An empty side loses to any
/// nonempty one; two empty sides are equivalent.
pub fn consequence_lift_compare<E: EventOrdering>(
    ordering: &E,
    d1: &Act,
    d2: &Act,
    attitude: Attitude,
) -> Result<Comparison> {
    let b12 = surely_reached_consequences(ordering, d1, d2)?;
    let b21 = surely_reached_consequences(ordering, d2, d1)?;
    let scale = d1.scale();
    let pick = |side: &[usize]| -> Option<Rank> {
        let ranks = side.iter().map(|&c| scale.rank(c));
        match attitude {
            Attitude::Pessimistic => ranks.min(),
            Attitude::Optimistic => ranks.max(),
        }
    };
    Ok(match (pick(&b12), pick(&b21)) {
        (None, None) => Comparison::Equivalent,
        (Some(_), None) => Comparison::Greater,
        (None, Some(_)) => Comparison::Less,
        (Some(r1), Some(r2)) => Comparison::from_ord(r1.cmp(&r2)),
    })
}
