//! Lexicographic initial segments, shadows, Hilton's reformulation of
//! cross-intersection and the Kruskal–Katona compression statement.

use crate::error::{precondition, Error, Result};
use crate::family::{complement_family, cross_intersecting, Family};
use crate::kset::{choose, rank_bits, submasks_of_size, GroundSet, KSet};

/// `𝓛(n, t, m)`: the first `m` t-subsets of `[n]` in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LexSegment {
    pub n: u32,
    pub t: u32,
    pub m: u64,
}

impl LexSegment {
    pub fn new(n: u32, t: u32, m: u64) -> Result<Self> {
        GroundSet::new(n, t)?;
        let total = choose(n, t);
        if m > total {
            return precondition(format!("m = {m} exceeds C({n},{t}) = {total}"));
        }
        Ok(LexSegment { n, t, m })
    }

    pub fn materialize(&self) -> Result<Family> {
        let ground = GroundSet::new(self.n, self.t)?;
        let mut f = Family::new(ground)?;
        for bits in LexSets::new(self.n, self.t).take(self.m as usize) {
            f.insert_rank(rank_bits(bits));
        }
        Ok(f)
    }
}

/// t-subsets of `[n]` as masks, in lexicographic order.
#[derive(Clone, Debug)]
pub struct LexSets {
    n: u32,
    elems: Vec<u32>,
    done: bool,
}

impl LexSets {
    pub fn new(n: u32, t: u32) -> Self {
        LexSets {
            n,
            elems: (1..=t).collect(),
            done: t > n,
        }
    }
}

impl Iterator for LexSets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let out = self.elems.iter().fold(0u64, |m, &e| m | 1u64 << (e - 1));
        let t = self.elems.len();
        // rightmost position that can still move up
        match (0..t)
            .rev()
            .find(|&i| self.elems[i] < self.n - (t - 1 - i) as u32)
        {
            Some(i) => {
                self.elems[i] += 1;
                for j in i + 1..t {
                    self.elems[j] = self.elems[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// Index of `s` among the t-subsets of `[n]` in lexicographic order.
pub fn lex_rank(n: u32, s: KSet) -> u64 {
    let t = s.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, e) in s.elements().into_iter().enumerate() {
        let left = t - i as u32 - 1;
        for skipped in prev + 1..e {
            rank += choose(n - skipped, left);
        }
        prev = e;
    }
    rank
}

/// The set at position `index` in lexicographic order.
pub fn lex_unrank(n: u32, t: u32, mut index: u64) -> Result<KSet> {
    let ground = GroundSet::new(n, t)?;
    if index >= ground.size() {
        return precondition(format!("lex index {index} out of range for C({n},{t})"));
    }
    let mut bits = 0u64;
    let mut e = 1;
    for left in (0..t).rev() {
        loop {
            let with_e = choose(n - e, left);
            if index < with_e {
                break;
            }
            index -= with_e;
            e += 1;
        }
        bits |= 1u64 << (e - 1);
        e += 1;
    }
    KSet::from_bits(ground, bits)
}

/// `𝓛(n, t, m)` as a family.
pub fn lex_segment(n: u32, t: u32, m: u64) -> Result<Family> {
    LexSegment::new(n, t, m)?.materialize()
}

/// The `l`-shadow: every `l`-set contained in some member.
pub fn shadow(f: &Family, l: u32) -> Result<Family> {
    if l == 0 || l >= f.k() {
        return precondition(format!(
            "shadow level {l} must satisfy 1 <= l < k = {}",
            f.k()
        ));
    }
    shadow_at(f, l)
}

fn shadow_at(f: &Family, l: u32) -> Result<Family> {
    if l == f.k() {
        return Ok(f.clone());
    }
    let mut out = Family::new(GroundSet::new(f.n(), l)?)?;
    for s in f.iter() {
        for sub in submasks_of_size(s.bits(), l) {
            out.insert_rank(rank_bits(sub));
        }
    }
    Ok(out)
}

/// Truth of `A ∩ σ^(a)(B^c) = ∅` for an a-uniform `a` and b-uniform `b` on
/// the same `[n]`.
///
/// At the boundary `n = a + b` the complements already have size `a` and the
/// shadow is taken to be `B^c` itself.
pub fn hilton_equivalent_check(a: &Family, b: &Family) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::GroundMismatch(a.n(), b.n()));
    }
    let n = a.n();
    if a.k() + b.k() > n {
        return precondition(format!("need a + b <= n, got {} + {} > {n}", a.k(), b.k()));
    }
    let comp = complement_family(b)?;
    let sh = shadow_at(&comp, a.k())?;
    a.is_disjoint(&sh)
}

/// Replaces a cross-intersecting pair by the lex segments of the same sizes
/// and reports whether those are cross-intersecting. Kruskal–Katona says they
/// always are, so `false` means a bug somewhere below.
pub fn kk_compress_check(a: &Family, b: &Family) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::GroundMismatch(a.n(), b.n()));
    }
    let n = a.n();
    if n <= a.k() + b.k() {
        return precondition(format!(
            "need n > a + b, got n = {n}, a + b = {}",
            a.k() + b.k()
        ));
    }
    if !cross_intersecting(a, b)? {
        return precondition("input pair is not cross-intersecting");
    }
    let la = lex_segment(n, a.k(), a.len())?;
    let lb = lex_segment(n, b.k(), b.len())?;
    cross_intersecting(&la, &lb)
}

fn check_partner_args(n: u32, a: u32, b: u32, m: u64) -> Result<()> {
    if n <= a + b {
        return precondition(format!("need n > a + b, got n = {n}, a = {a}, b = {b}"));
    }
    GroundSet::new(n, a)?;
    GroundSet::new(n, b)?;
    if m == 0 || m > choose(n, a) {
        return precondition(format!("m = {m} outside [1, C({n},{a})]"));
    }
    Ok(())
}

/// All b-subsets of `[n]` meeting every member of `𝓛(n, a, m)`: the largest
/// b-uniform family cross-intersecting with that segment.
pub fn cross_partners(n: u32, a: u32, b: u32, m: u64) -> Result<Family> {
    check_partner_args(n, a, b, m)?;
    let seg: Vec<u64> = LexSets::new(n, a).take(m as usize).collect();
    let ground = GroundSet::new(n, b)?;
    Family::from_predicate(ground, |y| seg.iter().all(|&x| x & y != 0))
}

/// `|cross_partners(n, a, b, m)|`.
pub fn max_cross_partner(n: u32, a: u32, b: u32, m: u64) -> Result<u64> {
    check_partner_args(n, a, b, m)?;
    let seg: Vec<u64> = LexSets::new(n, a).take(m as usize).collect();
    let ground = GroundSet::new(n, b)?;
    Ok(ground
        .ksets()
        .filter(|&y| seg.iter().all(|&x| x & y != 0))
        .count() as u64)
}
