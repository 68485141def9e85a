//! Fixed-universe bit sets used for attribute and object subsets.
//!
//! A set remembers the size of its universe so that complements and the
//! full set are well defined. All binary operations expect both operands to
//! share the same universe.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;

use smallvec::SmallVec;

const WORD: usize = 64;

/// Marker for sets of attribute positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Attr {}

/// Marker for sets of object positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Obj {}

/// Marker for sets of lattice node positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {}

/// A subset of `0..universe`, tagged with the kind of thing it indexes.
pub struct IndexSet<K> {
    universe: usize,
    words: SmallVec<[u64; 2]>,
    _kind: PhantomData<K>,
}

// manual impls: derives would demand the same traits of the marker `K`
impl<K> Clone for IndexSet<K> {
    fn clone(&self) -> Self {
        IndexSet {
            universe: self.universe,
            words: self.words.clone(),
            _kind: PhantomData,
        }
    }
}

impl<K> PartialEq for IndexSet<K> {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.words == other.words
    }
}

impl<K> Eq for IndexSet<K> {}

impl<K> Hash for IndexSet<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.universe.hash(state);
        self.words.hash(state);
    }
}

/// A subset of the attributes of a context.
pub type AttrSet = IndexSet<Attr>;
/// A subset of the objects of a context.
pub type ObjSet = IndexSet<Obj>;

fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

impl<K> IndexSet<K> {
    pub fn empty(universe: usize) -> Self {
        IndexSet {
            universe,
            words: SmallVec::from_elem(0, word_count(universe)),
            _kind: PhantomData,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.trim();
        set
    }

    /// Builds a set from element positions.
    ///
    /// Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set from the low `universe` bits of `mask`, bit `i` standing for element `i`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(
            universe <= WORD,
            "mask conversion needs a universe of at most 64"
        );
        let mut set = Self::empty(universe);
        if universe > 0 {
            set.words[0] = mask;
            set.trim();
        }
        set
    }

    /// Inverse of [`IndexSet::from_mask`].
    pub fn to_mask(&self) -> u64 {
        assert!(
            self.universe <= WORD,
            "mask conversion needs a universe of at most 64"
        );
        self.words.first().copied().unwrap_or(0)
    }

    /// The `rank`-th subset of a universe of size `universe` in lectic order.
    ///
    /// Element 0 is the most significant position, so ranks `0..2^universe`
    /// enumerate every subset with lectically smaller sets first.
    pub fn from_lectic_rank(universe: usize, rank: u64) -> Self {
        assert!(universe <= WORD);
        let mut set = Self::empty(universe);
        for i in 0..universe {
            if rank >> (universe - 1 - i) & 1 == 1 {
                set.insert(i);
            }
        }
        set
    }

    /// Inverse of [`IndexSet::from_lectic_rank`].
    pub fn lectic_rank(&self) -> u64 {
        assert!(self.universe <= WORD);
        self.iter()
            .fold(0u64, |acc, i| acc | 1 << (self.universe - 1 - i))
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.universe,
            "index {i} out of range for universe {}",
            self.universe
        );
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
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

    /// Cardinality.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + WORD - 1 - w.leading_zeros() as usize)
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Lectic order: the set holding the smallest element of the symmetric
    /// difference is the larger one.
    pub fn lectic_cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = 1u64 << diff.trailing_zeros();
                return if a & bit != 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        Ordering::Equal
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a, K> IntoIterator for &'a IndexSet<K> {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl<K> fmt::Debug for IndexSet<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
