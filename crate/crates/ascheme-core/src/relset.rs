//! Small bitsets over relation indices.

use alloc::vec;
use alloc::vec::Vec;

const BITS: usize = 64;

/// A set of relation indices of a fixed-rank scheme, stored as a bitmap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RelSet {
    rank: usize,
    words: Vec<u64>,
}

impl RelSet {
    pub fn empty(rank: usize) -> Self {
        RelSet { rank, words: vec![0; rank.div_ceil(BITS)] }
    }

    pub fn full(rank: usize) -> Self {
        let mut s = Self::empty(rank);
        for i in 0..rank {
            s.insert(i);
        }
        s
    }

    pub fn singleton(rank: usize, index: usize) -> Self {
        let mut s = Self::empty(rank);
        s.insert(index);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(rank: usize, indices: I) -> Self {
        let mut s = Self::empty(rank);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < self.rank);
        self.words[index / BITS] |= 1 << (index % BITS);
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.rank && self.words[index / BITS] >> (index % BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &RelSet) {
        debug_assert_eq!(self.rank, other.rank);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &RelSet) {
        debug_assert_eq!(self.rank, other.rank);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &RelSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Iterate members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = RelSet::empty(70);
        s.insert(0);
        s.insert(69);
        assert!(s.contains(0) && s.contains(69) && !s.contains(33));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![0, 69]);
        let t = RelSet::from_indices(70, [0, 5, 69]);
        assert!(s.is_subset(&t));
        assert!(!t.is_subset(&s));
        s.union_with(&t);
        assert_eq!(s, t);
    }
}
