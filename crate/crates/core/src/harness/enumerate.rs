//! Canonical enumerations of profiles, scales, acts, and weight vectors.
//!
//! Everything is generated in lexicographic order over the underlying
//! vectors so sweeps and searches are reproducible.

use crate::ordinal::{Act, OutcomeScale, StateSpace};
use crate::uncertainty::{Level, PossibilityProfile};

/// The standard spaces `s1..sn` for every size from 1 to `max_states`.
pub fn spaces_up_to(max_states: usize) -> Vec<StateSpace> {
    (1..=max_states)
        .map(|n| {
            StateSpace::new((1..=n).map(|i| format!("s{i}"))).expect("generated space is valid")
        })
        .collect()
}

/// All level vectors of length `n` over `0..=max_level`, lexicographic,
/// including the all-zero vector (which no profile accepts).
pub fn level_assignments(n: usize, max_level: Level) -> Vec<Vec<Level>> {
    let mut out = Vec::new();
    let mut current = vec![0u8; n];
    loop {
        out.push(current.clone());
        // increment as a base-(max_level+1) counter, last coordinate fastest
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < max_level {
                current[i] += 1;
                for c in current.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

/// Every possibility profile over the space with levels up to `max_level`,
/// in lexicographic level order. The all-zero assignment is skipped.
pub fn profiles(space: &StateSpace, max_level: Level) -> Vec<PossibilityProfile> {
    level_assignments(space.len(), max_level)
        .into_iter()
        .filter_map(|levels| PossibilityProfile::new(space, levels).ok())
        .collect()
}

/// All rank vectors of length `count` over `0..max_rank`, lexicographic.
fn rank_vectors(count: usize, max_rank: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; count];
    loop {
        out.push(current.clone());
        let mut i = count;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] + 1 < max_rank {
                current[i] += 1;
                for c in current.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

fn scale_from_ranks(ranks: &[u32]) -> OutcomeScale {
    OutcomeScale::new(
        ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| (format!("x{}", i + 1), r)),
    )
    .expect("generated scale has two distinct ranks")
}

/// Scales over `count` consequences with pairwise-distinct ranks drawn from
/// `0..count` (all permutations, lexicographic).
pub fn scales_distinct_ranks(count: usize) -> Vec<OutcomeScale> {
    rank_vectors(count, count as u32)
        .into_iter()
        .filter(|ranks| {
            let mut seen = vec![false; ranks.len()];
            ranks.iter().all(|&r| {
                let r = r as usize;
                !std::mem::replace(&mut seen[r], true)
            })
        })
        .map(|ranks| scale_from_ranks(&ranks))
        .collect()
}

/// Scales over `count` consequences with ranks drawn from `0..max_rank`,
/// ties allowed, at least two distinct ranks present.
pub fn scales_with_ties(count: usize, max_rank: u32) -> Vec<OutcomeScale> {
    rank_vectors(count, max_rank)
        .into_iter()
        .filter(|ranks| {
            let mut distinct = ranks.clone();
            distinct.sort_unstable();
            distinct.dedup();
            distinct.len() >= 2
        })
        .map(|ranks| scale_from_ranks(&ranks))
        .collect()
}

/// Every act from the space into the scale, ordered lexicographically by
/// consequence-index vector.
pub fn all_acts(space: &StateSpace, scale: &OutcomeScale) -> Vec<Act> {
    let n = space.len();
    let k = scale.len();
    let mut out = Vec::with_capacity(k.pow(n as u32));
    let mut image = vec![0u16; n];
    loop {
        out.push(
            Act::from_outcome_indices(space, scale, image.clone()).expect("generated act is total"),
        );
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if usize::from(image[i]) + 1 < k {
                image[i] += 1;
                for c in image.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

/// All weight vectors of length `n` over `1..=max_weight`, lexicographic.
pub fn weight_vectors(n: usize, max_weight: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = vec![1i64; n];
    loop {
        out.push(current.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < max_weight {
                current[i] += 1;
                for c in current.iter_mut().skip(i + 1) {
                    *c = 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_assignments_cover_the_cube() {
        let all = level_assignments(2, 2);
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all.last().unwrap(), &vec![2, 2]);
    }

    #[test]
    fn profiles_skip_the_trivial_assignment() {
        let space = StateSpace::new(["a", "b"]).unwrap();
        let ps = profiles(&space, 1);
        assert_eq!(ps.len(), 3);
        assert_eq!(ps[0].levels(), &[0, 1]);
    }

    #[test]
    fn distinct_scales_are_permutations() {
        let scales = scales_distinct_ranks(3);
        assert_eq!(scales.len(), 6);
        for s in &scales {
            let mut ranks: Vec<u32> = (0..s.len()).map(|i| s.rank(i)).collect();
            ranks.sort_unstable();
            assert_eq!(ranks, vec![0, 1, 2]);
        }
    }

    #[test]
    fn tied_scales_need_two_distinct_ranks() {
        let scales = scales_with_ties(2, 3);
        assert_eq!(scales.len(), 6); // 9 vectors minus 3 constant ones
    }

    #[test]
    fn act_enumeration_is_exhaustive_and_lexicographic() {
        let space = StateSpace::new(["a", "b"]).unwrap();
        let scale = scale_from_ranks(&[0, 1, 2]);
        let acts = all_acts(&space, &scale);
        assert_eq!(acts.len(), 9);
        assert_eq!(acts[0].outcome_index(0), 0);
        assert_eq!(acts[0].outcome_index(1), 0);
        assert_eq!(acts[1].outcome_index(1), 1);
        assert_eq!(acts[8].outcome_index(0), 2);
    }

    #[test]
    fn weight_vectors_cover_the_box() {
        let ws = weight_vectors(3, 2);
        assert_eq!(ws.len(), 8);
        assert_eq!(ws[0], vec![1, 1, 1]);
        assert_eq!(ws[7], vec![2, 2, 2]);
    }
}
