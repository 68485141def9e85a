//! Concept lattice over the intents of a context, and the linearity and
//! distributivity indices.
//!
//! Both indices are fractions over the `n(n-1)/2` unordered pairs of
//! distinct concepts, so they lie in `[0, 1]`; a lattice with at most one
//! concept scores 1 on both. The raw pair counts are exposed as well.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::bitset::{AttrSet, IndexSet, Node, ObjSet};
use crate::charsets::enumerate_intents;
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::num::Scalar;

#[derive(Clone, Debug)]
pub struct ConceptLattice {
    intents: Vec<AttrSet>,
    /// `below[i]` holds every `j` whose intent strictly contains intent `i`,
    /// i.e. the concepts strictly below concept `i`.
    below: Vec<IndexSet<Node>>,
    index: HashMap<AttrSet, usize>,
}

impl ConceptLattice {
    /// Builds the lattice from the complete list of intents, in any order.
    pub fn build(mut intents: Vec<AttrSet>) -> Result<Self> {
        intents.sort_by(|a, b| a.lectic_cmp(b));
        if let Some(w) = intents.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateIntent(w[0].iter().collect()));
        }
        let n = intents.len();
        let below = intents
            .par_iter()
            .map(|a| {
                IndexSet::from_indices(
                    n,
                    intents
                        .iter()
                        .enumerate()
                        .filter(|(_, b)| a.is_proper_subset(b))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        let index = intents
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        Ok(ConceptLattice {
            intents,
            below,
            index,
        })
    }

    pub fn from_context(ctx: &FormalContext) -> Self {
        Self::build(enumerate_intents(ctx)).expect("closure enumeration yields distinct intents")
    }

    /// Intents in lectic order.
    pub fn intents(&self) -> &[AttrSet] {
        &self.intents
    }

    pub fn len(&self) -> usize {
        self.intents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intents.is_empty()
    }

    pub fn position(&self, intent: &AttrSet) -> Option<usize> {
        self.index.get(intent).copied()
    }

    /// Concept `i` lies strictly below concept `j` (its intent is larger).
    pub fn is_below(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    /// The concept `(extent, intent)` at position `i`.
    pub fn concept(&self, ctx: &FormalContext, i: usize) -> (ObjSet, AttrSet) {
        (ctx.extent(&self.intents[i]), self.intents[i].clone())
    }

    pub fn pair_count(&self) -> u64 {
        let n = self.len() as u64;
        n * n.saturating_sub(1) / 2
    }

    /// Unordered pairs of distinct concepts that are comparable.
    pub fn comparable_pairs(&self) -> u64 {
        self.below.iter().map(|s| s.len() as u64).sum()
    }

    /// Unordered pairs of distinct intents whose union is an intent.
    pub fn union_closed_pairs(&self) -> u64 {
        let set: HashSet<&AttrSet> = self.intents.iter().collect();
        self.intents
            .par_iter()
            .enumerate()
            .map(|(i, a)| {
                self.intents[i + 1..]
                    .iter()
                    .filter(|b| set.contains(&a.union(b)))
                    .count() as u64
            })
            .sum()
    }

    /// Probability that two distinct concepts drawn at random are comparable.
    pub fn linearity<T: Scalar>(&self) -> T {
        fraction(self.comparable_pairs(), self.pair_count())
    }

    /// Fraction of pairs of distinct intents whose union is again an intent.
    pub fn distributivity<T: Scalar>(&self) -> T {
        fraction(self.union_closed_pairs(), self.pair_count())
    }
}

fn fraction<T: Scalar>(num: u64, den: u64) -> T {
    if den == 0 {
        T::one()
    } else {
        T::ratio(num, den)
    }
}

pub fn build_lattice(intents: Vec<AttrSet>) -> Result<ConceptLattice> {
    ConceptLattice::build(intents)
}

pub fn linearity<T: Scalar>(lattice: &ConceptLattice) -> T {
    lattice.linearity()
}

pub fn distributivity<T: Scalar>(lattice: &ConceptLattice) -> T {
    lattice.distributivity()
}
