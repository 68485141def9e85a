use std::collections::HashSet;

use super::{is_key, is_proper_premise, min_generator_size, CharFlags, KeyIndex};
use crate::bitset::AttrSet;
use crate::context::FormalContext;

/// Evaluates every class for `attrs` directly from the definitions.
///
/// `pseudo_intents` must be the complete output of
/// [`enumerate_pseudo_intents`](super::enumerate_pseudo_intents). The
/// passkey flag searches for the smallest generator of the closure on
/// demand; use [`Classifier`] when classifying many sets.
pub fn classify(ctx: &FormalContext, attrs: &AttrSet, pseudo_intents: &[AttrSet]) -> CharFlags {
    let closure = ctx.closure(attrs);
    let key = is_key(ctx, attrs);
    CharFlags {
        is_generator: true,
        is_intent: closure == *attrs,
        is_pseudo_intent: pseudo_intents.contains(attrs),
        is_key: key,
        is_passkey: key && min_generator_size(ctx, &closure) == attrs.len(),
        is_proper_premise: key && is_proper_premise(ctx, attrs),
    }
}

/// Precomputed class memberships for fast repeated classification.
#[derive(Clone, Debug)]
pub struct Classifier<'a> {
    ctx: &'a FormalContext,
    pseudo_intents: HashSet<AttrSet>,
    keys: KeyIndex,
    key_set: HashSet<AttrSet>,
    proper_premises: HashSet<AttrSet>,
}

impl<'a> Classifier<'a> {
    pub fn new(ctx: &'a FormalContext) -> Self {
        let keys = KeyIndex::build(ctx);
        let proper_premises = keys.proper_premises(ctx).into_iter().collect();
        Classifier {
            ctx,
            pseudo_intents: super::enumerate_pseudo_intents(ctx).into_iter().collect(),
            key_set: keys.keys.iter().cloned().collect(),
            keys,
            proper_premises,
        }
    }

    pub fn context(&self) -> &'a FormalContext {
        self.ctx
    }

    pub fn key_index(&self) -> &KeyIndex {
        &self.keys
    }

    pub fn classify(&self, attrs: &AttrSet) -> CharFlags {
        let is_key = self.key_set.contains(attrs);
        let closure = self.ctx.closure(attrs);
        CharFlags {
            is_generator: true,
            is_intent: closure == *attrs,
            is_pseudo_intent: self.pseudo_intents.contains(attrs),
            is_key,
            is_passkey: is_key && self.keys.min_key_size[&closure] == attrs.len(),
            is_proper_premise: self.proper_premises.contains(attrs),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charsets::enumerate_pseudo_intents;
    use crate::fixtures;

    #[test]
    fn toy_flags() {
        let ctx = fixtures::geometric_figures();
        let pi = enumerate_pseudo_intents(&ctx);
        let idx = Classifier::new(&ctx);

        let bc = ctx.attrs(&["b", "c"]);
        let f = classify(&ctx, &bc, &pi);
        assert!(f.is_intent && !f.is_pseudo_intent);

        let e = ctx.attrs(&["e"]);
        let f = classify(&ctx, &e, &pi);
        assert_eq!(
            f,
            CharFlags {
                is_generator: true,
                is_intent: false,
                is_pseudo_intent: true,
                is_key: true,
                is_passkey: true,
                is_proper_premise: true,
            }
        );

        assert!(classify(&ctx, &ctx.all_attrs(), &pi).is_intent);
        assert!(classify(&ctx, &ctx.attrs(&["a", "b"]), &pi).is_proper_premise);

        let acd = classify(&ctx, &ctx.attrs(&["a", "c", "d"]), &pi);
        assert!(acd.is_key && !acd.is_passkey);
        let bd = classify(&ctx, &ctx.attrs(&["b", "d"]), &pi);
        assert!(bd.is_key && bd.is_passkey);

        for r in 0..32 {
            let b = AttrSet::from_lectic_rank(5, r);
            assert_eq!(idx.classify(&b), classify(&ctx, &b, &pi), "{b:?}");
        }
    }
}
