//! Uniform families stored as membership bitsets over colex ranks, plus the
//! basic predicates: intersecting, cross-intersecting, stars, diversity,
//! restrictions and complements.

use std::fmt;

use crate::error::{precondition, Error, Result};
use crate::kset::{choose, colex_rank, rank_bits, submasks_of_size, unrank_bits, GroundSet, KSet};

/// Largest number of k-subsets a [`Family`] may index.
pub const MAX_FAMILY_RANKS: u64 = 1 << 28;

/// A k-uniform family on `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Family {
    ground: GroundSet,
    words: Vec<u64>,
}

impl Family {
    /// The empty family on `ground`.
    pub fn new(ground: GroundSet) -> Result<Self> {
        let count = ground.size();
        if count > MAX_FAMILY_RANKS {
            return Err(Error::TooLarge {
                n: ground.n(),
                k: ground.k(),
                count,
                cap: MAX_FAMILY_RANKS,
            });
        }
        Ok(Family {
            ground,
            words: vec![0; count.div_ceil(64) as usize],
        })
    }

    /// All of `C([n], k)`.
    pub fn complete(ground: GroundSet) -> Result<Self> {
        let mut f = Family::new(ground)?;
        let count = ground.size();
        for (i, w) in f.words.iter_mut().enumerate() {
            let lo = i as u64 * 64;
            let bits = (count - lo).min(64);
            *w = if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        Ok(f)
    }

    /// Every k-subset whose mask satisfies `keep`.
    pub fn from_predicate(ground: GroundSet, mut keep: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut f = Family::new(ground)?;
        for (rank, bits) in ground.ksets().enumerate() {
            if keep(bits) {
                f.words[rank >> 6] |= 1u64 << (rank & 63);
            }
        }
        Ok(f)
    }

    pub fn from_sets(ground: GroundSet, sets: impl IntoIterator<Item = KSet>) -> Result<Self> {
        let mut f = Family::new(ground)?;
        for s in sets {
            ground.check(s.bits())?;
            f.insert(s);
        }
        Ok(f)
    }

    /// Convenience constructor from 1-based element lists.
    pub fn from_lists<S: AsRef<[u32]>>(
        ground: GroundSet,
        lists: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let mut f = Family::new(ground)?;
        for l in lists {
            let s = KSet::from_elements(ground, l.as_ref())?;
            if !f.insert(s) {
                return Err(Error::DuplicateMember(s.elements()));
            }
        }
        Ok(f)
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> u32 {
        self.ground.n()
    }

    pub fn k(&self) -> u32 {
        self.ground.k()
    }

    /// Adds `s`; returns `false` if it was already present.
    pub fn insert(&mut self, s: KSet) -> bool {
        debug_assert!(self.ground.check(s.bits()).is_ok());
        let r = colex_rank(s) as usize;
        let (w, b) = (r >> 6, r & 63);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1u64 << b;
        fresh
    }

    pub fn remove(&mut self, s: KSet) -> bool {
        if s.len() != self.k() || s.bits() & !self.ground.full_mask() != 0 {
            return false;
        }
        let r = colex_rank(s) as usize;
        let (w, b) = (r >> 6, r & 63);
        let present = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1u64 << b);
        present
    }

    pub fn contains(&self, s: KSet) -> bool {
        if s.len() != self.k() || s.bits() & !self.ground.full_mask() != 0 {
            return false;
        }
        self.contains_rank(colex_rank(s))
    }

    #[inline]
    pub(crate) fn contains_bits(&self, bits: u64) -> bool {
        self.contains_rank(rank_bits(bits))
    }

    #[inline]
    pub fn contains_rank(&self, rank: u64) -> bool {
        let r = rank as usize;
        self.words
            .get(r >> 6)
            .is_some_and(|w| w >> (r & 63) & 1 == 1)
    }

    pub(crate) fn insert_rank(&mut self, rank: u64) {
        let r = rank as usize;
        self.words[r >> 6] |= 1u64 << (r & 63);
    }

    pub fn len(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ranks of the members in increasing (colex) order.
    pub fn ranks(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(i as u64 * 64 + b)
            })
        })
    }

    /// Members in colex order.
    pub fn iter(&self) -> impl Iterator<Item = KSet> + '_ {
        let (n, k) = (self.n(), self.k());
        self.ranks().map(move |r| KSet::raw(unrank_bits(n, k, r)))
    }

    /// Member masks in colex order.
    pub fn masks(&self) -> Vec<u64> {
        self.iter().map(KSet::bits).collect()
    }

    fn same_ground(&self, other: &Family) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        self.same_ground(other)?;
        let mut out = self.clone();
        out.words
            .iter_mut()
            .zip(&other.words)
            .for_each(|(a, b)| *a |= b);
        Ok(out)
    }

    pub fn intersection(&self, other: &Family) -> Result<Family> {
        self.same_ground(other)?;
        let mut out = self.clone();
        out.words
            .iter_mut()
            .zip(&other.words)
            .for_each(|(a, b)| *a &= b);
        Ok(out)
    }

    pub fn difference(&self, other: &Family) -> Result<Family> {
        self.same_ground(other)?;
        let mut out = self.clone();
        out.words
            .iter_mut()
            .zip(&other.words)
            .for_each(|(a, b)| *a &= !b);
        Ok(out)
    }

    /// True when no set belongs to both families.
    pub fn is_disjoint(&self, other: &Family) -> Result<bool> {
        self.same_ground(other)?;
        Ok(self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0))
    }

    /// Mask of elements contained in every member.
    pub(crate) fn common_elements(&self) -> u64 {
        self.iter()
            .fold(self.ground.full_mask(), |m, s| m & s.bits())
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family(n={}, k={}) ", self.n(), self.k())?;
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Two k-uniform families on the same ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPair {
    pub a: Family,
    pub b: Family,
}

impl FamilyPair {
    pub fn new(a: Family, b: Family) -> Result<Self> {
        a.same_ground(&b)?;
        Ok(FamilyPair { a, b })
    }

    pub fn ground(&self) -> GroundSet {
        self.a.ground()
    }

    pub fn is_cross_intersecting(&self) -> bool {
        cross_witness(&self.a, &self.b)
            .expect("pair shares a ground set")
            .is_none()
    }

    pub fn is_disjoint(&self) -> bool {
        self.a
            .is_disjoint(&self.b)
            .expect("pair shares a ground set")
    }

    /// `min(|A|, |B|)`.
    pub fn min_size(&self) -> u64 {
        self.a.len().min(self.b.len())
    }

    pub fn sizes(&self) -> (u64, u64) {
        (self.a.len(), self.b.len())
    }
}

/// First `(A, B)` with `A` in `a`, `B` in `b` and `A ∩ B = ∅`, scanning `a` in
/// colex order and, for that `A`, `b` in colex order. The families must share
/// `n` but may differ in uniformity.
pub fn cross_witness(a: &Family, b: &Family) -> Result<Option<(KSet, KSet)>> {
    if a.n() != b.n() {
        return Err(Error::GroundMismatch(a.n(), b.n()));
    }
    let n = a.n();
    let (ka, kb) = (a.k(), b.k());
    if ka + kb > n || a.is_empty() || b.is_empty() {
        return Ok(None);
    }
    let full = a.ground().full_mask();
    let pairwise = a.len().saturating_mul(b.len());
    let partners = a.len().saturating_mul(choose(n - ka, kb));
    if pairwise <= partners {
        let bm = b.masks();
        for x in a.iter() {
            if let Some(&y) = bm.iter().find(|&&y| x.bits() & y == 0) {
                return Ok(Some((x, KSet::raw(y))));
            }
        }
    } else {
        for x in a.iter() {
            let outside = full & !x.bits();
            if let Some(y) = submasks_of_size(outside, kb).find(|&y| b.contains_bits(y)) {
                return Ok(Some((x, KSet::raw(y))));
            }
        }
    }
    Ok(None)
}

/// Every member of `a` meets every member of `b`. Vacuous for empty families.
pub fn cross_intersecting(a: &Family, b: &Family) -> Result<bool> {
    Ok(cross_witness(a, b)?.is_none())
}

/// Every two members share an element.
pub fn is_intersecting(f: &Family) -> bool {
    cross_witness(f, f).expect("same family").is_none()
}

/// Smallest element common to all members, or `None`. The empty family is
/// treated as the star at element 1.
pub fn is_star(f: &Family) -> Option<u32> {
    if f.is_empty() {
        return Some(1);
    }
    let common = f.common_elements();
    (common != 0).then(|| common.trailing_zeros() + 1)
}

/// `min_i |F(ī)|`: the fewest members avoiding a single element. Zero exactly
/// for stars (and the empty family).
pub fn diversity(f: &Family) -> u64 {
    let n = f.n() as usize;
    let mut containing = vec![0u64; n];
    let mut total = 0u64;
    for s in f.iter() {
        total += 1;
        let mut b = s.bits();
        while b != 0 {
            containing[b.trailing_zeros() as usize] += 1;
            b &= b - 1;
        }
    }
    containing.iter().map(|c| total - c).min().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Restriction {
    /// `F(i) = {F \ {i} : i ∈ F}` on `[n - 1]`, elements above `i` shifted down.
    Contains,
    /// `F(ī) = {F : i ∉ F}` on the same ground set.
    Avoids,
}

/// Removes bit `i - 1` and shifts the higher bits down by one.
#[inline]
pub(crate) fn delete_element(bits: u64, i: u32) -> u64 {
    let low = bits & ((1u64 << (i - 1)) - 1);
    let high = if i >= 64 { 0 } else { (bits >> i) << (i - 1) };
    low | high
}

pub fn restriction(f: &Family, i: u32, mode: Restriction) -> Result<Family> {
    let (n, k) = (f.n(), f.k());
    if i == 0 || i > n {
        return Err(Error::ElementOutOfRange { element: i, n });
    }
    let bit = 1u64 << (i - 1);
    match mode {
        Restriction::Avoids => {
            let mut out = Family::new(f.ground())?;
            for (r, s) in f.ranks().zip(f.iter()) {
                if s.bits() & bit == 0 {
                    out.insert_rank(r);
                }
            }
            Ok(out)
        }
        Restriction::Contains => {
            if k < 2 || n < 2 {
                return precondition(format!(
                    "restriction to sets containing {i} needs k >= 2 (k = {k})"
                ));
            }
            let ground = GroundSet::new(n - 1, k - 1)?;
            let mut out = Family::new(ground)?;
            for s in f.iter().filter(|s| s.bits() & bit != 0) {
                out.insert_rank(rank_bits(delete_element(s.bits(), i)));
            }
            Ok(out)
        }
    }
}

/// `{[n] \ F : F ∈ f}`, an `(n - k)`-uniform family.
pub fn complement_family(f: &Family) -> Result<Family> {
    let (n, k) = (f.n(), f.k());
    if k == n {
        return precondition("complements of n-sets are empty");
    }
    let ground = GroundSet::new(n, n - k)?;
    let full = f.ground().full_mask();
    let mut out = Family::new(ground)?;
    for s in f.iter() {
        out.insert_rank(rank_bits(full & !s.bits()));
    }
    Ok(out)
}

/// The full star `S_x` on `ground`.
pub fn full_star(ground: GroundSet, x: u32) -> Result<Family> {
    if x == 0 || x > ground.n() {
        return Err(Error::ElementOutOfRange {
            element: x,
            n: ground.n(),
        });
    }
    let bit = 1u64 << (x - 1);
    Family::from_predicate(ground, |s| s & bit != 0)
}
