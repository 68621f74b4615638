//! Explicit disjoint cross-intersecting pairs and a verifier for pairs.
//!
//! Element 1 is always the star centre and every interval is pinned, so each
//! generator is deterministic. Wherever a family has to be cut down, members
//! are taken in colex order.

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::family::{cross_witness, is_star, Family, FamilyPair};
use crate::kset::{choose, GroundSet, KSet};

fn checked_ground(n: u32, k: u32) -> Result<GroundSet> {
    if n <= 2 * k {
        return precondition(format!("need n > 2k, got n = {n}, k = {k}"));
    }
    GroundSet::new(n, k)
}

/// The full star at 1 cut in two: the first `⌊C(n-1,k-1)/2⌋` members (colex)
/// form `A`, the rest `B`.
pub fn half_star_split(n: u32, k: u32) -> Result<FamilyPair> {
    let ground = checked_ground(n, k)?;
    let half = choose(n - 1, k - 1) / 2;
    let mut taken = 0;
    let a = Family::from_predicate(ground, |s| {
        if s & 1 != 0 && taken < half {
            taken += 1;
            true
        } else {
            false
        }
    })?;
    let star = Family::from_predicate(ground, |s| s & 1 != 0)?;
    FamilyPair::new(a.clone(), star.difference(&a)?)
}

/// `𝓕 = {F : F ∩ [k] = {1} or [2,k]}` and `𝓖 = {G : 1 ∈ G, G ∩ [2,k] ≠ ∅}`,
/// before any rebalancing.
pub fn section3_families(n: u32, k: u32) -> Result<(Family, Family)> {
    let ground = checked_ground(n, k)?;
    if k < 3 {
        return precondition(format!("need k >= 3, got k = {k}"));
    }
    let head = KSet::interval_bits(1, k);
    let tail = KSet::interval_bits(2, k);
    let f = Family::from_predicate(ground, |s| {
        let t = s & head;
        t == 1 || t == tail
    })?;
    let g = Family::from_predicate(ground, |s| s & 1 != 0 && s & tail != 0)?;
    Ok((f, g))
}

/// The pair refuting the half-star value for small `n`.
///
/// Starts from `(𝓕, 𝓖)`; when `|𝓕| <= ⌊C(n-1,k-1)/2⌋` the colex-smallest
/// `⌊C(n-1,k-1)/2⌋ + 1 - |𝓕|` members of `𝓖` move over to `𝓕`'s side.
pub fn section3_pair(n: u32, k: u32) -> Result<FamilyPair> {
    let (f, g) = section3_families(n, k)?;
    let half = choose(n - 1, k - 1) / 2;
    let f_len = f.len();
    if f_len > half {
        return FamilyPair::new(f, g);
    }
    let need = half + 1 - f_len;
    if need > g.len() {
        return precondition(format!(
            "rebalancing needs {need} members of 𝓖 but |𝓖| = {}",
            g.len()
        ));
    }
    let mut g0 = Family::new(g.ground())?;
    for s in g.iter().take(need as usize) {
        g0.insert(s);
    }
    FamilyPair::new(f.union(&g0)?, g.difference(&g0)?)
}

/// Makes `(a_only ∪ O_A, b_only ∪ O_B)` disjoint with `|A| = a_target`, dealing
/// the overlap `O` alternately to A and B in colex order until one side's
/// quota is used up.
fn split_overlap(
    a_only: Family,
    b_only: Family,
    overlap: &Family,
    a_target: u64,
) -> Result<FamilyPair> {
    let o = overlap.len();
    let a_base = a_only.len();
    if a_target < a_base || a_target - a_base > o {
        return precondition(format!(
            "no equitable split: A needs {a_target}, has {a_base} fixed and {o} shared members"
        ));
    }
    let mut qa = a_target - a_base;
    let mut qb = o - qa;
    let (mut a, mut b) = (a_only, b_only);
    let mut to_a = true;
    for s in overlap.iter() {
        if (to_a && qa > 0) || qb == 0 {
            a.insert(s);
            qa -= 1;
        } else {
            b.insert(s);
            qb -= 1;
        }
        to_a = !to_a;
    }
    FamilyPair::new(a, b)
}

fn star_part_split(
    ground: GroundSet,
    a_star: &Family,
    b_star: &Family,
    extra_a: &[u64],
    extra_b: &[u64],
    a_target: u64,
) -> Result<FamilyPair> {
    let overlap = a_star.intersection(b_star)?;
    let mut a_only = a_star.difference(&overlap)?;
    let mut b_only = b_star.difference(&overlap)?;
    for &x in extra_a {
        a_only.insert(KSet::from_bits(ground, x)?);
    }
    for &x in extra_b {
        b_only.insert(KSet::from_bits(ground, x)?);
    }
    split_overlap(a_only, b_only, &overlap, a_target)
}

/// Star-free pair with `min = ⌊(C(n-1,k-1) - C(n-2k,k-1))/2⌋ + 1`.
///
/// With `P = [2,k+1]` and `Q = {2} ∪ [k+2,2k]` (so `P ∩ Q = {2}`):
/// `A = {X ∋ 1 : X ∩ Q ≠ ∅} ∪ {P}`, `B = {X ∋ 1 : X ∩ P ≠ ∅} ∪ {Q}`, and the
/// sets in both are shared out so that `A` gets the floor.
pub fn prop22_pair(n: u32, k: u32) -> Result<FamilyPair> {
    if k < 2 {
        return precondition(format!("need k >= 2, got k = {k}"));
    }
    let ground = checked_ground(n, k)?;
    let p = KSet::interval_bits(2, k + 1);
    let q = 0b10 | KSet::interval_bits(k + 2, 2 * k);
    let a_star = Family::from_predicate(ground, |s| s & 1 != 0 && s & q != 0)?;
    let b_star = Family::from_predicate(ground, |s| s & 1 != 0 && s & p != 0)?;
    let d = choose(n - 1, k - 1) - choose(n - 2 * k, k - 1);
    star_part_split(ground, &a_star, &b_star, &[p], &[q], d / 2 + 1)
}

/// Star-free pair with `min = ⌊(C(n-1,k-1) - C(n-2k,k-1) + k + 1)/2⌋`.
///
/// `A(1̄) = {[2,k+1]}`, `A(1) = {X ∋ 1 : X ∩ [k+2,2k] ≠ ∅}`,
/// `B(1̄) = {{j} ∪ [k+2,2k] : 2 <= j <= k+1}`, `B(1) = {X ∋ 1 : X ∩ [2,k+1] ≠ ∅}`.
/// The split needs `B`'s private part to stay below half of the total; that
/// breaks down around `n ≈ 0.54 k³` for `k = 5` and closer to `k³` for larger
/// `k`, all beyond the 64-element ground set.
pub fn prop55_pair(n: u32, k: u32) -> Result<FamilyPair> {
    if k < 5 {
        return precondition(format!("need k >= 5, got k = {k}"));
    }
    if n <= 2 * k + 1 {
        return precondition(format!("need n > 2k + 1, got n = {n}, k = {k}"));
    }
    let ground = GroundSet::new(n, k)?;
    let p = KSet::interval_bits(2, k + 1);
    let r = KSet::interval_bits(k + 2, 2 * k);
    let a_star = Family::from_predicate(ground, |s| s & 1 != 0 && s & r != 0)?;
    let b_star = Family::from_predicate(ground, |s| s & 1 != 0 && s & p != 0)?;
    let b_out: Vec<u64> = (2..=k + 1).map(|j| 1u64 << (j - 1) | r).collect();
    let d = choose(n - 1, k - 1) - choose(n - 2 * k, k - 1);
    star_part_split(
        ground,
        &a_star,
        &b_star,
        &[p],
        &b_out,
        (d + k as u64).div_ceil(2),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Disjoint,
    Cross,
    StarFree,
    Pyber,
    /// Compare `(|A|, |B|)` against an expected pair.
    Sizes(u64, u64),
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::Disjoint => "disjoint",
            Check::Cross => "cross",
            Check::StarFree => "star_free",
            Check::Pyber => "pyber",
            Check::Sizes(..) => "sizes",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: String,
    pub passed: bool,
    pub detail: String,
    /// Offending members as element lists, when the check is about a pair
    /// of sets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(Vec<u32>, Vec<u32>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: u32,
    pub k: u32,
    pub sizes: (u64, u64),
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, name: &str) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.check == name)
    }
}

pub fn verify_pair(p: &FamilyPair, checks: &[Check]) -> VerifyReport {
    let ground = p.ground();
    let (la, lb) = p.sizes();
    let mut outcomes = Vec::with_capacity(checks.len());
    for check in checks {
        let name = check.name().to_string();
        let out = match *check {
            Check::Disjoint => {
                let common = p.a.intersection(&p.b).expect("same ground");
                let first = common.iter().next();
                match first {
                    None => CheckOutcome {
                        check: name,
                        passed: true,
                        detail: "no shared member".into(),
                        witness: None,
                    },
                    Some(s) => CheckOutcome {
                        check: name,
                        passed: false,
                        detail: format!("{} shared members, first {s}", common.len()),
                        witness: Some((s.elements(), s.elements())),
                    },
                }
            }
            Check::Cross => match cross_witness(&p.a, &p.b).expect("same ground") {
                None => CheckOutcome {
                    check: name,
                    passed: true,
                    detail: "every A meets every B".into(),
                    witness: None,
                },
                Some((x, y)) => CheckOutcome {
                    check: name,
                    passed: false,
                    detail: format!("{x} ∩ {y} = ∅"),
                    witness: Some((x.elements(), y.elements())),
                },
            },
            Check::StarFree => {
                let sa = is_star(&p.a);
                let sb = is_star(&p.b);
                let passed = sa.is_none() && sb.is_none();
                let detail = match (sa, sb) {
                    (None, None) => "neither family is a star".to_string(),
                    (Some(x), None) => format!("A is a star at {x}"),
                    (None, Some(y)) => format!("B is a star at {y}"),
                    (Some(x), Some(y)) => format!("A is a star at {x}, B at {y}"),
                };
                CheckOutcome {
                    check: name,
                    passed,
                    detail,
                    witness: None,
                }
            }
            Check::Pyber => {
                let bound = choose(ground.n() - 1, ground.k() - 1) as u128;
                let bound = bound * bound;
                let product = la as u128 * lb as u128;
                if ground.n() < 2 * ground.k() || !p.is_cross_intersecting() {
                    CheckOutcome {
                        check: name,
                        passed: true,
                        detail: "not applicable (needs a cross-intersecting pair with n >= 2k)"
                            .into(),
                        witness: None,
                    }
                } else {
                    CheckOutcome {
                        check: name,
                        passed: product <= bound,
                        detail: format!("|A|·|B| = {product}, C(n-1,k-1)² = {bound}"),
                        witness: None,
                    }
                }
            }
            Check::Sizes(ea, eb) => CheckOutcome {
                check: name,
                passed: (la, lb) == (ea, eb),
                detail: format!("got ({la}, {lb}), expected ({ea}, {eb})"),
                witness: None,
            },
        };
        outcomes.push(out);
    }
    VerifyReport {
        n: ground.n(),
        k: ground.k(),
        sizes: (la, lb),
        outcomes,
    }
}
