//! Characteristic attribute sets of a formal context: intents,
//! pseudo-intents, keys (minimal generators), passkeys (minimum generators)
//! and proper premises, plus the implication bases built on them.

mod classify;
mod keys;
mod next_closure;
pub mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use self::classify::{classify, Classifier};
pub use self::keys::{
    enumerate_keys, enumerate_passkeys, enumerate_proper_premises, min_generator_size,
    proper_premise_basis, KeyIndex,
};
pub use self::next_closure::{dg_basis, enumerate_intents, enumerate_pseudo_intents, next_closure};
pub use self::oracle::brute_force_class;

use crate::bitset::AttrSet;
use crate::context::FormalContext;
use crate::error::Error;

/// Membership of one attribute subset in each characteristic class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharFlags {
    pub is_generator: bool,
    pub is_intent: bool,
    pub is_pseudo_intent: bool,
    pub is_key: bool,
    pub is_passkey: bool,
    pub is_proper_premise: bool,
}

impl CharFlags {
    pub fn get(&self, class: CharClass) -> bool {
        match class {
            CharClass::Generator => self.is_generator,
            CharClass::Intent => self.is_intent,
            CharClass::PseudoIntent => self.is_pseudo_intent,
            CharClass::Key => self.is_key,
            CharClass::Passkey => self.is_passkey,
            CharClass::ProperPremise => self.is_proper_premise,
        }
    }

    /// Whether the class-algebra constraints hold.
    pub fn is_consistent(&self) -> bool {
        self.is_generator
            && (!self.is_passkey || self.is_key)
            && (!self.is_proper_premise || self.is_key)
            && !(self.is_intent && self.is_pseudo_intent)
    }

    /// Sort key for grouped output: intent, key, passkey, pseudo-intent,
    /// proper premise, most significant first.
    pub(crate) fn rank_key(&self) -> [bool; 6] {
        [
            self.is_generator,
            self.is_intent,
            self.is_key,
            self.is_passkey,
            self.is_pseudo_intent,
            self.is_proper_premise,
        ]
    }
}

/// A named characteristic class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharClass {
    Generator,
    Intent,
    PseudoIntent,
    Key,
    Passkey,
    ProperPremise,
}

impl CharClass {
    pub const ALL: [CharClass; 6] = [
        CharClass::Generator,
        CharClass::Intent,
        CharClass::PseudoIntent,
        CharClass::Key,
        CharClass::Passkey,
        CharClass::ProperPremise,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CharClass::Generator => "generator",
            CharClass::Intent => "intent",
            CharClass::PseudoIntent => "pseudo_intent",
            CharClass::Key => "key",
            CharClass::Passkey => "passkey",
            CharClass::ProperPremise => "proper_premise",
        }
    }
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CharClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let norm = s.trim().to_ascii_lowercase().replace(['-', ' '], "_");
        Ok(match norm.as_str() {
            "generator" => CharClass::Generator,
            "intent" | "closed" | "closed_description" => CharClass::Intent,
            "pseudo_intent" => CharClass::PseudoIntent,
            "key" | "minimal_generator" => CharClass::Key,
            "passkey" | "minimum_generator" => CharClass::Passkey,
            "proper_premise" => CharClass::ProperPremise,
            _ => return Err(Error::Invalid(format!("unknown class {s:?}"))),
        })
    }
}

/// `premise → conclusion`, stored with the two sides disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Implication {
    pub premise: AttrSet,
    pub conclusion: AttrSet,
}

impl Implication {
    /// `premise → closure(premise) \ premise`.
    pub fn from_premise(ctx: &FormalContext, premise: AttrSet) -> Self {
        let conclusion = ctx.closure(&premise).difference(&premise);
        Implication {
            premise,
            conclusion,
        }
    }
}

/// Smallest superset of `attrs` respecting every implication of `basis`.
pub fn implication_closure(attrs: &AttrSet, basis: &[Implication]) -> AttrSet {
    closure_under(attrs, basis, false)
}

/// Fixpoint of applying implications whose premise is contained in the
/// current set; with `strict`, only premises that are proper subsets fire.
pub(crate) fn closure_under(attrs: &AttrSet, basis: &[Implication], strict: bool) -> AttrSet {
    let mut out = attrs.clone();
    let mut fired = vec![false; basis.len()];
    loop {
        let mut changed = false;
        for (imp, done) in basis.iter().zip(fired.iter_mut()) {
            if *done || !imp.premise.is_subset(&out) {
                continue;
            }
            if strict && imp.premise == out {
                continue;
            }
            *done = true;
            if !imp.conclusion.is_subset(&out) {
                out.union_with(&imp.conclusion);
                changed = true;
            }
        }
        if !changed {
            return out;
        }
    }
}

/// `A ∪ ⋃_{n∈A} (A∖{n})'' ≠ A''`.
pub fn is_proper_premise(ctx: &FormalContext, attrs: &AttrSet) -> bool {
    let mut covered = attrs.clone();
    for n in attrs {
        covered.union_with(&ctx.closure(&attrs.without(n)));
    }
    covered != ctx.closure(attrs)
}

/// No single attribute can be dropped without changing the closure.
pub fn is_key(ctx: &FormalContext, attrs: &AttrSet) -> bool {
    let size = ctx.extent(attrs).len();
    attrs
        .iter()
        .all(|m| ctx.extent(&attrs.without(m)).len() != size)
}

/// Sorts attribute sets into lectic order.
pub(crate) fn sort_lectic(sets: &mut [AttrSet]) {
    sets.sort_by(|a, b| a.lectic_cmp(b));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn implication_closure_toy() {
        let ctx = fixtures::geometric_figures();
        let basis = dg_basis(&ctx);
        assert_eq!(
            implication_closure(&ctx.attrs(&["b"]), &basis),
            ctx.attrs(&["b", "c"])
        );
        assert_eq!(
            implication_closure(&ctx.attrs(&["a", "d"]), &[]),
            ctx.attrs(&["a", "d"])
        );
        assert_eq!(
            implication_closure(&ctx.all_attrs(), &basis),
            ctx.all_attrs()
        );
    }

    #[test]
    fn proper_premise_toy() {
        let ctx = fixtures::geometric_figures();
        assert!(is_proper_premise(&ctx, &ctx.attrs(&["a", "b"])));
        assert!(!is_proper_premise(&ctx, &ctx.empty_attrs()));
        // {a,c,d} ∪ {a,c} ∪ {a,d} ∪ {b,c,d} = {a,b,c,d}, which misses e ∈ {a,c,d}''
        assert!(is_proper_premise(&ctx, &ctx.attrs(&["a", "c", "d"])));
        assert!(!is_proper_premise(&ctx, &ctx.attrs(&["b", "c"])));
    }

    #[test]
    fn class_names_round_trip() {
        for c in CharClass::ALL {
            assert_eq!(c.name().parse::<CharClass>().unwrap(), c);
        }
        assert_eq!(
            "minimum-generator".parse::<CharClass>().unwrap(),
            CharClass::Passkey
        );
        assert!("lattice".parse::<CharClass>().is_err());
    }
}
