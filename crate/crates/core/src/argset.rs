//! Fixed-width bit sets over the argument indices of one framework.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use smallvec::SmallVec;

const WORD: usize = 64;

/// A set of argument indices, stored as a bit mask sized to the framework.
///
/// Two sets are only comparable when they were created for the same
/// universe size; every constructor takes that size explicitly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArgSet {
    words: SmallVec<[u64; 4]>,
}

impl ArgSet {
    pub fn empty(universe: usize) -> Self {
        let n = universe.div_ceil(WORD).max(1);
        ArgSet {
            words: SmallVec::from_elem(0, n),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(i);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low bits of `mask` (bit `i` = argument `i`).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        let mut s = Self::empty(universe);
        s.words[0] = mask;
        s
    }

    /// An empty set of the same width.
    pub fn empty_like(&self) -> Self {
        ArgSet {
            words: SmallVec::from_elem(0, self.words.len()),
        }
    }

    /// The low 64 bits; only meaningful for universes of at most 64 arguments.
    pub fn low_mask(&self) -> u64 {
        self.words[0]
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| w & (1 << (i % WORD)) != 0)
    }

    pub fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ArgSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &ArgSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union_with(&mut self, other: &ArgSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ArgSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &ArgSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    /// Iterates members in increasing index order.
    pub fn iter(&self) -> Members<'_> {
        Members {
            words: &self.words,
            word: 0,
            current: self.words[0],
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl BitOr for &ArgSet {
    type Output = ArgSet;
    fn bitor(self, rhs: &ArgSet) -> ArgSet {
        let mut s = self.clone();
        s.union_with(rhs);
        s
    }
}

impl BitAnd for &ArgSet {
    type Output = ArgSet;
    fn bitand(self, rhs: &ArgSet) -> ArgSet {
        let mut s = self.clone();
        s.intersect_with(rhs);
        s
    }
}

impl Sub for &ArgSet {
    type Output = ArgSet;
    fn sub(self, rhs: &ArgSet) -> ArgSet {
        let mut s = self.clone();
        s.difference_with(rhs);
        s
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Members<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership_across_words() {
        let mut s = ArgSet::empty(200);
        s.insert(3);
        s.insert(64);
        s.insert(199);
        assert!(s.contains(64) && s.contains(199) && !s.contains(65));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 64, 199]);
        assert_eq!(s.len(), 3);
        s.remove(64);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 199]);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(
            a in proptest::collection::btree_set(0usize..150, 0..40),
            b in proptest::collection::btree_set(0usize..150, 0..40),
        ) {
            let sa = ArgSet::from_indices(150, a.iter().copied());
            let sb = ArgSet::from_indices(150, b.iter().copied());
            let u: Vec<_> = a.union(&b).copied().collect();
            let i: Vec<_> = a.intersection(&b).copied().collect();
            let d: Vec<_> = a.difference(&b).copied().collect();
            prop_assert_eq!((&sa | &sb).iter().collect::<Vec<_>>(), u);
            prop_assert_eq!((&sa & &sb).iter().collect::<Vec<_>>(), i);
            prop_assert_eq!((&sa - &sb).iter().collect::<Vec<_>>(), d);
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
        }
    }
}
