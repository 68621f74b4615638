//! Exact max-min on small Kneser graphs.
//!
//! `exact_maxmin` asks, for `t` descending from a proven upper bound, whether
//! some labelling reaches `min{|A|, |B|} >= t`; the first yes is the answer.
//! `exhaustive_labelings` is an independent brute-force oracle for it.

mod bnb;
mod exhaustive;
mod kneser;

use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::constructions::{
    half_star_split, prop22_pair, prop55_pair, section3_pair, verify_pair, Check,
};
use crate::error::{precondition, Error, Result};
use crate::family::{full_star, Family, FamilyPair};
use crate::kset::{choose, GroundSet, KSet};
use crate::regimes::{bounds, classify};

pub use exhaustive::{exhaustive_labelings, labelling_count, MAX_ORACLE_VERTICES, STATE_CAP};
pub use kneser::{KneserGraph, VSet, MAX_VERTICES};

use bnb::{Decision, Limits, Problem};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mode {
    pub star_free: bool,
    pub allow_overlap: bool,
}

impl Mode {
    pub const fn new(star_free: bool, allow_overlap: bool) -> Self {
        Mode {
            star_free,
            allow_overlap,
        }
    }

    pub const ALL: [Mode; 4] = [
        Mode::new(false, false),
        Mode::new(false, true),
        Mode::new(true, false),
        Mode::new(true, true),
    ];

    /// The checks a certificate must pass in this mode.
    pub fn checks(self) -> Vec<Check> {
        let mut checks = vec![Check::Cross];
        if !self.allow_overlap {
            checks.push(Check::Disjoint);
        }
        if self.star_free {
            checks.push(Check::StarFree);
        }
        checks
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub budget: Budget,
    pub workers: usize,
    /// Put the colex-first vertex in `A` up front.
    pub symmetry: bool,
    /// Start from the theorem-backed upper bounds; when off only the
    /// counting bounds `C(n,k)` and `⌊C(n,k)/2⌋` are used.
    pub theorem_bounds: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: Budget::unlimited(),
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            symmetry: true,
            theorem_bounds: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
    pub symmetry_fixed: bool,
    pub workers: usize,
    /// Feasibility questions asked.
    pub decisions: u32,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub n: u32,
    pub k: u32,
    pub mode: Mode,
    /// Present iff `lo == hi`.
    pub value: Option<u64>,
    pub lo: u64,
    pub hi: u64,
    /// Achieves `lo`.
    pub certificate: FamilyPair,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn is_exact(&self) -> bool {
        self.value.is_some()
    }
}

/// Vertices forced into `A` when `|A| >= 1` is sought: the colex-first
/// vertex `[1, k]`. Any member of `A` can be moved there by a permutation of
/// `[n]`, which preserves disjointness, cross-intersection and stars.
pub fn symmetry_fix(g: &KneserGraph) -> Vec<usize> {
    if g.is_empty() {
        Vec::new()
    } else {
        vec![0]
    }
}

/// `{S ∋ 1 : S ∩ [2,k+1] ≠ ∅} ∪ {[2,k+1]}`, intersecting and not a star.
fn hilton_milner_family(ground: GroundSet) -> Result<Family> {
    let k = ground.k();
    let block = KSet::interval_bits(2, k + 1);
    Family::from_predicate(ground, |s| (s & 1 != 0 && s & block != 0) || s == block)
}

/// The best pair the constructions module offers for `mode`.
pub fn best_construction(n: u32, k: u32, mode: Mode) -> Result<FamilyPair> {
    let ground = GroundSet::new(n, k)?;
    let mut candidates: Vec<FamilyPair> = Vec::new();
    match (mode.star_free, mode.allow_overlap) {
        (false, true) => {
            let star = full_star(ground, 1)?;
            candidates.push(FamilyPair::new(star.clone(), star)?);
        }
        (true, true) => {
            let hm = hilton_milner_family(ground)?;
            candidates.push(FamilyPair::new(hm.clone(), hm)?);
        }
        (star_free, false) => {
            if !star_free {
                candidates.push(half_star_split(n, k)?);
                if k >= 3 {
                    candidates.push(section3_pair(n, k)?);
                }
            }
            if k >= 2 {
                candidates.push(prop22_pair(n, k)?);
            }
            if k >= 5 && n > 2 * k + 1 {
                candidates.push(prop55_pair(n, k)?);
            }
        }
    }
    let mut best: Option<FamilyPair> = None;
    for c in candidates {
        if best.as_ref().is_none_or(|b| c.min_size() > b.min_size()) {
            best = Some(c);
        }
    }
    best.ok_or_else(|| Error::Precondition(format!("no construction for ({n},{k}) in {mode:?}")))
}

/// The starting `t` of the decision loop.
pub fn search_upper_bound(n: u32, k: u32, mode: Mode, theorem_bounds: bool) -> Result<u64> {
    let total = choose(n, k);
    let mut ub = if mode.allow_overlap { total } else { total / 2 };
    if theorem_bounds {
        let b = bounds(u64::from(n), u64::from(k))?;
        let small = |x: &num_bigint::BigUint| x.to_u64().unwrap_or(u64::MAX);
        ub = ub.min(small(&b.ekr));
        if !mode.allow_overlap && classify(u64::from(n), u64::from(k))?.eq_4_2 {
            ub = ub.min(small(&b.prop41_upper));
        }
        if mode.star_free {
            ub = ub.min(small(&b.hm));
        }
    }
    Ok(ub)
}

fn to_family(g: &KneserGraph, s: &VSet) -> Result<Family> {
    Family::from_sets(g.ground(), s.iter().map(|v| g.vertex(v)))
}

/// `f(n,k)` (or the star-free / overlapping variants) by branch and bound.
///
/// Returns an interval `[lo, hi]` instead of a value when the budget runs
/// out; `hi` is then the target whose decision was cut short.
pub fn exact_maxmin(n: u32, k: u32, mode: Mode, config: &SearchConfig) -> Result<SearchOutcome> {
    if n < 2 * k + 1 {
        return precondition(format!("search needs n >= 2k + 1, got n = {n}, k = {k}"));
    }
    if mode.star_free && k < 2 {
        return precondition("no star-free cross-intersecting pair exists for k = 1");
    }
    let start = Instant::now();
    let g = KneserGraph::new(GroundSet::new(n, k)?)?;
    let fallback = best_construction(n, k, mode)?;
    let lo = fallback.min_size();
    let ub = search_upper_bound(n, k, mode, config.theorem_bounds)?;
    if lo > ub {
        return Err(Error::Invariant(format!(
            "construction reaches {lo} above the upper bound {ub} at ({n},{k})"
        )));
    }

    let fixed = if config.symmetry {
        symmetry_fix(&g)
    } else {
        Vec::new()
    };
    let limits = Limits::new(
        config.budget.max_nodes,
        config.budget.time_limit.map(|d| start + d),
    );
    let workers = config.workers.max(1);
    let mut decisions = 0;
    let outcome =
        |value: Option<u64>, lo: u64, hi: u64, certificate: FamilyPair, decisions| SearchOutcome {
            n,
            k,
            mode,
            value,
            lo,
            hi,
            certificate,
            stats: SearchStats {
                nodes: limits.nodes(),
                elapsed_ms: start.elapsed().as_millis() as u64,
                symmetry_fixed: config.symmetry,
                workers,
                decisions,
            },
        };

    let mut t = ub;
    while t > lo {
        decisions += 1;
        let problem = Problem {
            g: &g,
            t: t as u32,
            star_free: mode.star_free,
            overlap: mode.allow_overlap,
        };
        match problem.decide(&fixed, &limits, workers) {
            Decision::Feasible(a, b) => {
                let pair = FamilyPair::new(to_family(&g, &a)?, to_family(&g, &b)?)?;
                check_certificate(&pair, mode, t)?;
                return Ok(outcome(Some(t), t, t, pair, decisions));
            }
            Decision::Infeasible => t -= 1,
            Decision::Aborted => return Ok(outcome(None, lo, t, fallback, decisions)),
        }
    }
    check_certificate(&fallback, mode, lo)?;
    Ok(outcome(Some(lo), lo, lo, fallback, decisions))
}

fn check_certificate(pair: &FamilyPair, mode: Mode, t: u64) -> Result<()> {
    let report = verify_pair(pair, &mode.checks());
    if !report.all_passed() || pair.min_size() < t {
        return Err(Error::Invariant(format!(
            "certificate fails verification for target {t}: {:?}",
            report.outcomes
        )));
    }
    Ok(())
}
