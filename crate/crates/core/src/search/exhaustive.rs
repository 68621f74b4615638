//! Brute-force oracle: every feasible labelling of a small Kneser graph.

use std::time::Instant;

use super::{Mode, SearchOutcome, SearchStats};
use crate::error::{precondition, Result};
use crate::family::{Family, FamilyPair};
use crate::kset::{GroundSet, KSet};

/// Largest number of labellings the oracle will visit.
pub const STATE_CAP: u64 = 100_000_000;

/// Largest vertex count; beyond it even counting the labellings is too slow.
pub const MAX_ORACLE_VERTICES: usize = 26;

struct Tiny {
    masks: Vec<u64>,
    adj: Vec<u32>,
    avoiding: Vec<u32>,
}

impl Tiny {
    fn new(ground: GroundSet) -> Self {
        let masks: Vec<u64> = ground.ksets().collect();
        let adj = masks
            .iter()
            .map(|&x| {
                masks
                    .iter()
                    .enumerate()
                    .filter(|(_, &y)| x & y == 0)
                    .fold(0u32, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        let avoiding = (0..ground.n())
            .map(|i| {
                masks
                    .iter()
                    .enumerate()
                    .filter(|(_, &y)| y >> i & 1 == 0)
                    .fold(0u32, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Tiny {
            masks,
            adj,
            avoiding,
        }
    }

    fn allowed(&self, a: u32, full: u32, overlap: bool) -> u32 {
        let mut nb = 0u32;
        let mut rest = a;
        while rest != 0 {
            nb |= self.adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        let mut allowed = full & !nb;
        if !overlap {
            allowed &= !a;
        }
        allowed
    }

    fn is_star(&self, s: u32) -> bool {
        s == 0 || self.avoiding.iter().any(|&av| av & s == 0)
    }

    fn family(&self, ground: GroundSet, s: u32) -> Result<Family> {
        let sets = (0..self.masks.len())
            .filter(|&j| s >> j & 1 == 1)
            .map(|j| KSet::raw(self.masks[j]));
        Family::from_sets(ground, sets)
    }
}

/// Number of feasible labellings: pairs `(A, B)` with no Kneser edge between
/// them (and `A ∩ B = ∅` unless overlap is allowed).
pub fn labelling_count(n: u32, k: u32, allow_overlap: bool) -> Result<u64> {
    let ground = GroundSet::new(n, k)?;
    let size = ground.size() as usize;
    if size > MAX_ORACLE_VERTICES {
        return precondition(format!(
            "C({n},{k}) = {size} vertices exceeds the oracle's {MAX_ORACLE_VERTICES}"
        ));
    }
    let tiny = Tiny::new(ground);
    let full = if size == 32 {
        u32::MAX
    } else {
        (1u32 << size) - 1
    };
    Ok((0..=full)
        .map(|a| 1u64 << tiny.allowed(a, full, allow_overlap).count_ones())
        .sum())
}

/// Exact max-min by enumerating every feasible labelling, no pruning.
pub fn exhaustive_labelings(n: u32, k: u32, mode: Mode) -> Result<SearchOutcome> {
    if n < 2 * k + 1 {
        return precondition(format!("search needs n >= 2k + 1, got n = {n}, k = {k}"));
    }
    if mode.star_free && k < 2 {
        return precondition("no star-free cross-intersecting pair exists for k = 1");
    }
    let states = labelling_count(n, k, mode.allow_overlap)?;
    if states > STATE_CAP {
        return precondition(format!(
            "{states} labellings at ({n},{k}) exceeds the oracle cap of {STATE_CAP}"
        ));
    }
    let start = Instant::now();
    let ground = GroundSet::new(n, k)?;
    let tiny = Tiny::new(ground);
    let size = tiny.masks.len();
    let full = (1u32 << size) - 1;

    let mut best: Option<(u32, u32, u32)> = None;
    let mut visited = 0u64;
    for a in 0..=full {
        let allowed = tiny.allowed(a, full, mode.allow_overlap);
        let size_a = a.count_ones();
        let a_star = mode.star_free && tiny.is_star(a);
        let mut b = allowed;
        loop {
            visited += 1;
            let value = size_a.min(b.count_ones());
            let ok = !mode.star_free || (!a_star && !tiny.is_star(b));
            if ok && best.is_none_or(|(v, _, _)| value > v) {
                best = Some((value, a, b));
            }
            if b == 0 {
                break;
            }
            b = (b - 1) & allowed;
        }
    }
    debug_assert_eq!(visited, states);
    let (value, a, b) = best.expect("the empty labelling is always feasible");
    if mode.star_free && value == 0 {
        return precondition(format!("no star-free pair exists at ({n},{k})"));
    }
    let certificate = FamilyPair::new(tiny.family(ground, a)?, tiny.family(ground, b)?)?;
    let value = u64::from(value);
    Ok(SearchOutcome {
        n,
        k,
        mode,
        value: Some(value),
        lo: value,
        hi: value,
        certificate,
        stats: SearchStats {
            nodes: visited,
            elapsed_ms: start.elapsed().as_millis() as u64,
            symmetry_fixed: false,
            workers: 1,
            decisions: 0,
        },
    })
}
