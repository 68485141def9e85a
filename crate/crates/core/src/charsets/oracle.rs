//! Definitional membership scans over the whole power set.
//!
//! Every class is decided by a literal quantifier scan of its definition,
//! on bit masks, with derivation operators computed straight from the rows.
//! Nothing here shares code with the enumeration algorithms; the scans are
//! used to check them.

use std::collections::HashMap;

use super::CharClass;
use crate::bitset::AttrSet;
use crate::context::FormalContext;
use crate::error::{Error, Result};

/// Largest attribute count for which power-set scans are supported.
pub const EXHAUSTIVE_LIMIT: usize = 25;

pub(crate) fn check_capacity(ctx: &FormalContext, what: &'static str) -> Result<()> {
    if ctx.n_attributes() > EXHAUSTIVE_LIMIT {
        return Err(Error::Capacity {
            what,
            limit: EXHAUSTIVE_LIMIT,
            actual: ctx.n_attributes(),
        });
    }
    Ok(())
}

/// Power-set table of `B ↦ B''` for a small context.
pub struct PowerSet {
    n: usize,
    closure: Vec<u32>,
}

impl PowerSet {
    pub fn new(ctx: &FormalContext) -> Result<Self> {
        check_capacity(ctx, "power-set scan")?;
        let n = ctx.n_attributes();
        let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
        let rows: Vec<u32> = ctx.rows().iter().map(|r| r.to_mask() as u32).collect();
        let closure = (0..1u32 << n)
            .map(|b| {
                // B' = rows containing B; B'' = their common attributes
                rows.iter()
                    .filter(|&&r| r & b == b)
                    .fold(full, |acc, &r| acc & r)
            })
            .collect();
        Ok(PowerSet { n, closure })
    }

    fn size(&self) -> u32 {
        1 << self.n
    }

    pub fn closure(&self, b: u32) -> u32 {
        self.closure[b as usize]
    }

    fn is_intent(&self, b: u32) -> bool {
        self.closure(b) == b
    }

    fn is_key(&self, d: u32) -> bool {
        bits(d).all(|m| self.closure(d & !(1 << m)) != self.closure(d))
    }

    fn is_proper_premise(&self, a: u32) -> bool {
        let covered = bits(a).fold(a, |acc, n| acc | self.closure(a & !(1 << n)));
        covered != self.closure(a)
    }

    fn keys(&self) -> Vec<u32> {
        (0..self.size()).filter(|&d| self.is_key(d)).collect()
    }

    fn passkeys(&self) -> Vec<u32> {
        let keys = self.keys();
        let mut smallest: HashMap<u32, u32> = HashMap::new();
        for &k in &keys {
            let e = smallest.entry(self.closure(k)).or_insert(u32::MAX);
            *e = (*e).min(k.count_ones());
        }
        keys.into_iter()
            .filter(|&d| smallest[&self.closure(d)] == d.count_ones())
            .collect()
    }

    /// Pseudo-intents by the recursive definition: `P ≠ P''` and
    /// `Q'' ⊆ P` for every pseudo-intent `Q ⊊ P` (strictly contained
    /// closure when `strict`).
    pub fn pseudo_intents(&self, strict: bool) -> Vec<u32> {
        let mut by_size: Vec<u32> = (0..self.size()).collect();
        by_size.sort_by_key(|b| b.count_ones());
        let mut found: Vec<u32> = Vec::new();
        for p in by_size {
            if self.is_intent(p) {
                continue;
            }
            let ok = found.iter().filter(|&&q| q & p == q && q != p).all(|&q| {
                let c = self.closure(q);
                c & p == c && (!strict || c != p)
            });
            if ok {
                found.push(p);
            }
        }
        found
    }

    pub fn members(&self, class: CharClass) -> Vec<u32> {
        match class {
            CharClass::Generator => (0..self.size()).collect(),
            CharClass::Intent => (0..self.size()).filter(|&b| self.is_intent(b)).collect(),
            CharClass::PseudoIntent => self.pseudo_intents(false),
            CharClass::Key => self.keys(),
            CharClass::Passkey => self.passkeys(),
            CharClass::ProperPremise => (0..self.size())
                .filter(|&a| self.is_proper_premise(a))
                .collect(),
        }
    }

    pub fn to_sets(&self, masks: &[u32]) -> Vec<AttrSet> {
        let mut sets: Vec<AttrSet> = masks
            .iter()
            .map(|&m| AttrSet::from_mask(self.n, m as u64))
            .collect();
        super::sort_lectic(&mut sets);
        sets
    }
}

fn bits(mask: u32) -> impl Iterator<Item = u32> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

/// Every member of `class`, by exhaustive scan; lectic order.
pub fn brute_force_class(ctx: &FormalContext, class: CharClass) -> Result<Vec<AttrSet>> {
    let ps = PowerSet::new(ctx)?;
    Ok(ps.to_sets(&ps.members(class)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn toy_pseudo_intents_both_readings() {
        let ctx = fixtures::geometric_figures();
        let ps = PowerSet::new(&ctx).unwrap();
        let expected = vec![
            ctx.attrs(&["a", "b", "c"]),
            ctx.attrs(&["b"]),
            ctx.attrs(&["c", "d"]),
            ctx.attrs(&["e"]),
        ];
        let mut expected = expected;
        crate::charsets::sort_lectic(&mut expected);
        assert_eq!(ps.to_sets(&ps.pseudo_intents(false)), expected);
        assert_eq!(ps.to_sets(&ps.pseudo_intents(true)), expected);
    }

    #[test]
    fn nominal_intents() {
        let ctx = fixtures::nominal_scale(3);
        let intents = brute_force_class(&ctx, CharClass::Intent).unwrap();
        assert_eq!(intents.len(), 5);
        let pi = brute_force_class(&ctx, CharClass::PseudoIntent).unwrap();
        assert_eq!(pi.len(), 3);
        assert!(pi.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn empty_attribute_keys() {
        let ctx = FormalContext::from_fn(2, 0, |_, _| false);
        assert_eq!(
            brute_force_class(&ctx, CharClass::Key).unwrap(),
            vec![AttrSet::empty(0)]
        );
    }

    #[test]
    fn capacity_guard() {
        let ctx = FormalContext::from_fn(1, 26, |_, _| true);
        assert!(matches!(
            brute_force_class(&ctx, CharClass::Intent),
            Err(Error::Capacity { limit: 25, .. })
        ));
    }
}
