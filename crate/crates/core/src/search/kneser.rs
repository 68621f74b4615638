use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not};

use crate::error::{precondition, Result};
use crate::kset::{GroundSet, KSet};

/// Hard cap on the number of Kneser vertices the search handles.
pub const MAX_VERTICES: usize = 256;

/// A set of at most 256 vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VSet([u64; 4]);

impl VSet {
    pub const EMPTY: VSet = VSet([0; 4]);

    /// `{0, ..., len - 1}`.
    pub fn prefix(len: usize) -> VSet {
        let mut w = [0u64; 4];
        for (i, word) in w.iter_mut().enumerate() {
            let lo = i * 64;
            if len >= lo + 64 {
                *word = u64::MAX;
            } else if len > lo {
                *word = (1u64 << (len - lo)) - 1;
            }
        }
        VSet(w)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    #[inline]
    pub fn intersects(&self, other: &VSet) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &VSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

impl BitAnd for VSet {
    type Output = VSet;
    #[inline]
    fn bitand(self, o: VSet) -> VSet {
        VSet([
            self.0[0] & o.0[0],
            self.0[1] & o.0[1],
            self.0[2] & o.0[2],
            self.0[3] & o.0[3],
        ])
    }
}

impl BitOr for VSet {
    type Output = VSet;
    #[inline]
    fn bitor(self, o: VSet) -> VSet {
        VSet([
            self.0[0] | o.0[0],
            self.0[1] | o.0[1],
            self.0[2] | o.0[2],
            self.0[3] | o.0[3],
        ])
    }
}

impl Not for VSet {
    type Output = VSet;
    #[inline]
    fn not(self) -> VSet {
        VSet([!self.0[0], !self.0[1], !self.0[2], !self.0[3]])
    }
}

impl BitAndAssign for VSet {
    #[inline]
    fn bitand_assign(&mut self, o: VSet) {
        *self = *self & o;
    }
}

impl BitOrAssign for VSet {
    #[inline]
    fn bitor_assign(&mut self, o: VSet) {
        *self = *self | o;
    }
}

/// `K(n, k)`: vertices are the k-subsets of `[n]` in colex order, edges join
/// disjoint sets. Two families are cross-intersecting exactly when no edge
/// runs between them.
#[derive(Clone, Debug)]
pub struct KneserGraph {
    ground: GroundSet,
    vertices: Vec<u64>,
    adjacency: Vec<VSet>,
    /// `avoiding[i]`: vertices not containing element `i + 1`.
    avoiding: Vec<VSet>,
}

impl KneserGraph {
    pub fn new(ground: GroundSet) -> Result<Self> {
        let (n, k) = (ground.n(), ground.k());
        if n < 2 * k {
            return precondition(format!("Kneser graph needs n >= 2k, got n = {n}, k = {k}"));
        }
        let count = ground.size();
        if count > MAX_VERTICES as u64 {
            return precondition(format!(
                "C({n},{k}) = {count} vertices exceeds the cap of {MAX_VERTICES}"
            ));
        }
        let vertices: Vec<u64> = ground.ksets().collect();
        let adjacency = vertices
            .iter()
            .map(|&x| {
                let mut row = VSet::EMPTY;
                for (j, &y) in vertices.iter().enumerate() {
                    if x & y == 0 {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let avoiding = (0..n)
            .map(|i| {
                let mut s = VSet::EMPTY;
                for (j, &y) in vertices.iter().enumerate() {
                    if y >> i & 1 == 0 {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        Ok(KneserGraph {
            ground,
            vertices,
            adjacency,
            avoiding,
        })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, v: usize) -> KSet {
        KSet::raw(self.vertices[v])
    }

    pub fn neighbours(&self, v: usize) -> &VSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adjacency[v].len()
    }

    pub fn all(&self) -> VSet {
        VSet::prefix(self.len())
    }

    pub(crate) fn avoiding(&self) -> &[VSet] {
        &self.avoiding
    }

    /// True when every member of `s` contains a common element (or `s` is
    /// empty, which counts as a star).
    pub fn is_star(&self, s: &VSet) -> bool {
        s.is_empty() || self.avoiding.iter().any(|av| !av.intersects(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kset::choose;

    #[test]
    fn degrees_are_uniform() {
        for (n, k) in [(5u32, 2u32), (6, 2), (7, 3), (9, 4), (8, 3)] {
            let g = KneserGraph::new(GroundSet::new(n, k).unwrap()).unwrap();
            assert_eq!(g.len() as u64, choose(n, k));
            for v in 0..g.len() {
                assert_eq!(g.degree(v) as u64, choose(n - k, k));
            }
        }
    }

    #[test]
    fn petersen_graph() {
        let g = KneserGraph::new(GroundSet::new(5, 2).unwrap()).unwrap();
        let edges: u32 = (0..g.len()).map(|v| g.degree(v)).sum::<u32>() / 2;
        assert_eq!(edges, 15);
        // {1,2} (rank 0) is adjacent to {3,4}, {3,5}, {4,5}
        let nb: Vec<String> = g
            .neighbours(0)
            .iter()
            .map(|v| g.vertex(v).to_string())
            .collect();
        assert_eq!(nb, ["{3,4}", "{3,5}", "{4,5}"]);
    }

    #[test]
    fn rejects_oversized_and_degenerate() {
        assert!(KneserGraph::new(GroundSet::new(11, 4).unwrap()).is_err());
        assert!(KneserGraph::new(GroundSet::new(5, 3).unwrap()).is_err());
        assert!(KneserGraph::new(GroundSet::new(10, 3).unwrap()).is_ok());
    }

    #[test]
    fn vset_basics() {
        let mut s = VSet::EMPTY;
        s.insert(3);
        s.insert(200);
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 200]);
        assert_eq!(s.first(), Some(3));
        s.remove(3);
        assert!(!s.contains(3));
        assert_eq!(VSet::prefix(130).len(), 130);
        assert!(s.is_subset(&VSet::prefix(256)));
    }

    #[test]
    fn star_detection() {
        let g = KneserGraph::new(GroundSet::new(5, 2).unwrap()).unwrap();
        let mut s = VSet::EMPTY;
        s.insert(0); // {1,2}
        s.insert(1); // {1,3}
        assert!(g.is_star(&s));
        s.insert(2); // {2,3}
        assert!(!g.is_star(&s));
        assert!(g.is_star(&VSet::EMPTY));
    }
}
