//! Ground sets and k-subsets of `[n]` packed into a `u64`.
//!
//! Element `i` of `[n] = {1, ..., n}` is stored at bit `i - 1`. Families index
//! their members by colexicographic rank, which does not depend on `n`: the
//! rank of a set is the same whether it is viewed inside `[n]` or `[n + 1]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_N: u32 = 64;

const fn pascal() -> [[u64; 65]; 65] {
    let mut t = [[0u64; 65]; 65];
    let mut n = 0;
    while n <= 64 {
        t[n][0] = 1;
        let mut r = 1;
        while r <= n {
            t[n][r] = t[n - 1][r - 1] + if r < n { t[n - 1][r] } else { 0 };
            r += 1;
        }
        n += 1;
    }
    t
}

static PASCAL: [[u64; 65]; 65] = pascal();

/// `C(n, r)` for `n <= 64`; zero when `r > n`.
#[inline]
pub fn choose(n: u32, r: u32) -> u64 {
    if r > n || n > MAX_N {
        return 0;
    }
    PASCAL[n as usize][r as usize]
}

/// `{1, ..., n}` together with the uniformity `k` of the sets living on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u32,
    k: u32,
}

impl GroundSet {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if k == 0 || k > n || n > MAX_N {
            return Err(Error::InvalidGround { n, k });
        }
        Ok(GroundSet { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of k-subsets, `C(n, k)`.
    pub fn size(&self) -> u64 {
        choose(self.n, self.k)
    }

    /// Mask of the whole ground set.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// All k-subsets as masks, in colex order (rank `i` is the `i`-th item).
    pub fn ksets(&self) -> Combinations {
        Combinations::new(self.k, self.size())
    }

    /// Checks that `bits` is a k-subset of `[n]`.
    pub fn check(&self, bits: u64) -> Result<()> {
        if bits & !self.full_mask() != 0 {
            let element = 64 - bits.leading_zeros();
            return Err(Error::ElementOutOfRange { element, n: self.n });
        }
        if bits.count_ones() != self.k {
            return Err(Error::WrongSize {
                got: bits.count_ones(),
                expected: self.k,
            });
        }
        Ok(())
    }
}

/// A subset of `[n]`, bit `i - 1` standing for element `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSet(u64);

impl KSet {
    pub fn from_bits(ground: GroundSet, bits: u64) -> Result<Self> {
        ground.check(bits)?;
        Ok(KSet(bits))
    }

    /// Builds a set from a strictly increasing list of 1-based elements.
    pub fn from_elements(ground: GroundSet, elements: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        let mut prev = 0u32;
        for &e in elements {
            if e == 0 || e > ground.n {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    n: ground.n,
                });
            }
            if e <= prev {
                return Err(Error::Unsorted);
            }
            prev = e;
            bits |= 1u64 << (e - 1);
        }
        Self::from_bits(ground, bits)
    }

    /// Set `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn interval_bits(lo: u32, hi: u32) -> u64 {
        (lo..=hi).fold(0u64, |m, e| m | 1u64 << (e - 1))
    }

    pub(crate) fn raw(bits: u64) -> Self {
        KSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, element: u32) -> bool {
        (1..=64).contains(&element) && self.0 >> (element - 1) & 1 == 1
    }

    pub fn intersects(self, other: KSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn elements(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut b = self.0;
        while b != 0 {
            out.push(b.trailing_zeros() + 1);
            b &= b - 1;
        }
        out
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Colexicographic rank: `sum C(a_i - 1, i)` over the sorted elements
/// `a_1 < ... < a_k`. The rank of `{1, ..., k}` is zero.
pub fn colex_rank(s: KSet) -> u64 {
    rank_bits(s.0)
}

#[inline]
pub(crate) fn rank_bits(mut bits: u64) -> u64 {
    let mut rank = 0;
    let mut i = 1;
    while bits != 0 {
        let e = bits.trailing_zeros();
        rank += choose(e, i);
        i += 1;
        bits &= bits - 1;
    }
    rank
}

/// Inverse of [`colex_rank`] on the k-subsets of `[n]`.
pub fn colex_unrank(ground: GroundSet, rank: u64) -> Result<KSet> {
    if rank >= ground.size() {
        return Err(Error::Precondition(format!(
            "rank {rank} out of range for C({}, {})",
            ground.n, ground.k
        )));
    }
    Ok(KSet(unrank_bits(ground.n, ground.k, rank)))
}

#[inline]
pub(crate) fn unrank_bits(n: u32, k: u32, mut rank: u64) -> u64 {
    let mut bits = 0u64;
    let mut c = n;
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= rank
        c -= 1;
        while choose(c, i) > rank {
            c -= 1;
        }
        rank -= choose(c, i);
        bits |= 1u64 << c;
    }
    bits
}

/// Lexicographic order on equal-sized sets: `g < h` iff the least element of
/// `g \ h` is smaller than the least element of `h \ g`.
pub fn lex_compare(g: KSet, h: KSet) -> Ordering {
    debug_assert_eq!(g.len(), h.len());
    if g == h {
        return Ordering::Equal;
    }
    let only_g = g.0 & !h.0;
    let only_h = h.0 & !g.0;
    only_g.trailing_zeros().cmp(&only_h.trailing_zeros())
}

/// [`lex_compare`] on strictly increasing element lists of equal length, for
/// sets that do not fit the 64-element representation.
pub fn lex_compare_lists(g: &[u32], h: &[u32]) -> Ordering {
    debug_assert_eq!(g.len(), h.len());
    let only_g = g.iter().find(|e| h.binary_search(e).is_err());
    let only_h = h.iter().find(|e| g.binary_search(e).is_err());
    match (only_g, only_h) {
        (Some(x), Some(y)) => x.cmp(y),
        _ => Ordering::Equal,
    }
}

/// Successor of a fixed-popcount mask in increasing integer (= colex) order.
#[inline]
pub(crate) fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    if c == 0 {
        return 0;
    }
    (((r ^ x) >> 2) / c) | r
}

/// Iterator over the `count` smallest k-bit masks in colex order.
#[derive(Clone, Debug)]
pub struct Combinations {
    next: u64,
    remaining: u64,
}

impl Combinations {
    pub(crate) fn new(k: u32, count: u64) -> Self {
        let first = if k == 0 {
            0
        } else if k >= 64 {
            u64::MAX
        } else {
            (1u64 << k) - 1
        };
        Combinations {
            next: first,
            remaining: count,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        if self.remaining == 0 {
            return None;
        }
        let cur = self.next;
        self.remaining -= 1;
        if self.remaining > 0 {
            self.next = next_combination(cur);
        }
        Some(cur)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

/// All `size`-subsets of the bits of `mask`, as masks.
pub(crate) fn submasks_of_size(mask: u64, size: u32) -> impl Iterator<Item = u64> {
    let positions: Vec<u32> = KSet(mask).elements();
    let m = positions.len() as u32;
    Combinations::new(size, choose(m, size)).map(move |sel| {
        let mut out = 0u64;
        let mut s = sel;
        while s != 0 {
            out |= 1u64 << (positions[s.trailing_zeros() as usize] - 1);
            s &= s - 1;
        }
        out
    })
}
