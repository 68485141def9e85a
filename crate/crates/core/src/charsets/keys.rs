//! Levelwise key (minimal generator) enumeration and the classes derived
//! from it.

use std::collections::HashMap;

use super::{is_proper_premise, Implication};
use crate::bitset::{AttrSet, ObjSet};
use crate::context::FormalContext;

/// Every key together with its closure, plus the minimum key size of each
/// closure class.
#[derive(Clone, Debug)]
pub struct KeyIndex {
    /// Keys in lectic order.
    pub keys: Vec<AttrSet>,
    /// `closures[i]` is the closure of `keys[i]`.
    pub closures: Vec<AttrSet>,
    /// Intent -> size of its smallest key.
    pub min_key_size: HashMap<AttrSet, usize>,
}

impl KeyIndex {
    pub fn build(ctx: &FormalContext) -> Self {
        let mut found: Vec<(AttrSet, AttrSet)> = Vec::new();

        // keys of the current size, with their extents
        let empty = ctx.empty_attrs();
        let mut level: HashMap<AttrSet, ObjSet> = HashMap::new();
        let top = ctx.extent(&empty);
        found.push((empty.clone(), ctx.intent_of(&top)));
        level.insert(empty, top);

        while !level.is_empty() {
            let mut next = HashMap::new();
            for parent in level.keys() {
                let start = parent.last().map_or(0, |l| l + 1);
                let parent_extent = &level[parent];
                for m in start..ctx.n_attributes() {
                    let candidate = parent.with(m);
                    let extent = parent_extent.intersection(ctx.column(m));
                    let size = extent.len();
                    // every immediate subset must be a key with a strictly larger extent
                    let minimal = candidate.iter().all(|x| {
                        level
                            .get(&candidate.without(x))
                            .is_some_and(|e| e.len() != size)
                    });
                    if minimal {
                        found.push((candidate.clone(), ctx.intent_of(&extent)));
                        next.insert(candidate, extent);
                    }
                }
            }
            level = next;
        }

        found.sort_by(|a, b| a.0.lectic_cmp(&b.0));
        let mut min_key_size: HashMap<AttrSet, usize> = HashMap::new();
        for (key, closure) in &found {
            let e = min_key_size.entry(closure.clone()).or_insert(usize::MAX);
            *e = (*e).min(key.len());
        }
        let (keys, closures) = found.into_iter().unzip();
        KeyIndex {
            keys,
            closures,
            min_key_size,
        }
    }

    pub fn passkeys(&self) -> Vec<AttrSet> {
        self.keys
            .iter()
            .zip(&self.closures)
            .filter(|(k, c)| self.min_key_size[*c] == k.len())
            .map(|(k, _)| k.clone())
            .collect()
    }

    pub fn proper_premises(&self, ctx: &FormalContext) -> Vec<AttrSet> {
        self.keys
            .iter()
            .filter(|k| is_proper_premise(ctx, k))
            .cloned()
            .collect()
    }
}

/// All keys, in lectic order.
pub fn enumerate_keys(ctx: &FormalContext) -> Vec<AttrSet> {
    KeyIndex::build(ctx).keys
}

/// For every intent, its keys of minimum size; lectic order.
pub fn enumerate_passkeys(ctx: &FormalContext) -> Vec<AttrSet> {
    KeyIndex::build(ctx).passkeys()
}

/// All proper premises, in lectic order. Every proper premise is a key, so
/// the keys are filtered.
pub fn enumerate_proper_premises(ctx: &FormalContext) -> Vec<AttrSet> {
    KeyIndex::build(ctx).proper_premises(ctx)
}

/// `Q → Q''∖Q` for every proper premise `Q`.
pub fn proper_premise_basis(ctx: &FormalContext) -> Vec<Implication> {
    enumerate_proper_premises(ctx)
        .into_iter()
        .map(|q| Implication::from_premise(ctx, q))
        .collect()
}

/// Size of the smallest attribute set whose closure is `intent`.
///
/// Any such set lies inside `intent`, so subsets of it are searched by
/// increasing size.
pub fn min_generator_size(ctx: &FormalContext, intent: &AttrSet) -> usize {
    let elems: Vec<usize> = intent.iter().collect();
    for k in 0..=elems.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let set = AttrSet::from_indices(intent.universe(), idx.iter().map(|&i| elems[i]));
            if ctx.closure(&set) == *intent {
                return k;
            }
            if !next_combination(&mut idx, elems.len()) {
                break;
            }
        }
    }
    unreachable!("{intent:?} is not closed")
}

/// Advances `idx` to the next k-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
