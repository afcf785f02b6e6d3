//! Fixed-width vertex sets.
//!
//! Every graph in this crate keeps one [`VertexSet`] per vertex. The set is a
//! small `Copy` array of machine words, so adjacency rows can be intersected
//! and unioned without allocation. Labels up to [`MAX_VERTICES`]` - 1` fit.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

const WORDS: usize = 4;

/// Largest vertex count any graph or digraph may have.
pub const MAX_VERTICES: usize = WORDS * 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        let mut s = VertexSet::new();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            index: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

/// Ascending iterator over a [`VertexSet`].
pub struct Iter {
    words: [u64; WORDS],
    index: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.index < WORDS {
            let w = self.words[self.index];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.index] &= w - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
        }
        None
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $tra:ident, $fa:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(mut self, rhs: VertexSet) -> VertexSet {
                self.$fa(rhs);
                self
            }
        }
        impl $tra for VertexSet {
            #[inline]
            fn $fa(&mut self, rhs: VertexSet) {
                for (a, b) in self.words.iter_mut().zip(rhs.words) {
                    *a $op b;
                }
            }
        }
    };
}

binop!(BitAnd, bitand, BitAndAssign, bitand_assign, &=);
binop!(BitOr, bitor, BitOrAssign, bitor_assign, |=);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        self -= rhs;
        self
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        for (a, b) in self.words.iter_mut().zip(rhs.words) {
            *a &= !b;
        }
    }
}

// Complement relative to the whole label space; intersect with `full(n)`.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(mut self) -> VertexSet {
        for a in self.words.iter_mut() {
            *a = !*a;
        }
        self
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_and_iterate_across_words() {
        let mut s = VertexSet::new();
        for v in [0, 5, 63, 64, 130, 255] {
            s.insert(v);
        }
        assert_eq!(s.len(), 6);
        assert_eq!(s.to_vec(), vec![0, 5, 63, 64, 130, 255]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(255));
        s.remove(0);
        s.remove(255);
        assert_eq!(s.first(), Some(5));
        assert_eq!(s.last(), Some(130));
        assert!(!s.contains(0));
        assert!(s.contains(64));
    }

    #[test]
    fn full_sets() {
        assert!(VertexSet::full(0).is_empty());
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).last(), Some(64));
        assert_eq!(VertexSet::full(MAX_VERTICES).len(), MAX_VERTICES);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 2, 3, 70].iter().collect();
        let b: VertexSet = [2, 3, 4].iter().collect();
        assert_eq!((a & b).to_vec(), vec![2, 3]);
        assert_eq!((a | b).to_vec(), vec![1, 2, 3, 4, 70]);
        assert_eq!((a - b).to_vec(), vec![1, 70]);
        assert!((a & b).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert!((a - b).is_disjoint(&b));
        assert_eq!((!a & VertexSet::full(5)).to_vec(), vec![0, 4]);
    }
}
