use super::{closure_under, Implication};
use crate::bitset::AttrSet;
use crate::context::FormalContext;

/// The lectically next set after `current` that is closed under `closure`,
/// or `None` when `current` is the last one.
///
/// `closure` must be a closure operator on the attribute universe of
/// `current`, and `current` must be closed under it.
pub fn next_closure(
    current: &AttrSet,
    mut closure: impl FnMut(&AttrSet) -> AttrSet,
) -> Option<AttrSet> {
    let mut base = current.clone();
    for i in (0..current.universe()).rev() {
        if base.contains(i) {
            base.remove(i);
            continue;
        }
        let candidate = closure(&base.with(i));
        // candidate is canonical iff it adds nothing below i
        let added = candidate.difference(&base);
        if added.first() == Some(i) {
            return Some(candidate);
        }
    }
    None
}

/// All intents, in lectic order.
pub fn enumerate_intents(ctx: &FormalContext) -> Vec<AttrSet> {
    let mut out = vec![ctx.closure(&ctx.empty_attrs())];
    while let Some(next) = next_closure(out.last().expect("non-empty"), |b| ctx.closure(b)) {
        out.push(next);
    }
    out
}

/// All pseudo-intents, in lectic order.
///
/// Walks the sets closed under "own closure plus the pseudo-closure of the
/// implications found so far" (the intents and pseudo-intents together); a
/// set in that family which is not an intent is a pseudo-intent.
pub fn enumerate_pseudo_intents(ctx: &FormalContext) -> Vec<AttrSet> {
    dg_basis(ctx).into_iter().map(|imp| imp.premise).collect()
}

/// Duquenne-Guigues basis: one implication per pseudo-intent, in lectic
/// order of premises.
pub fn dg_basis(ctx: &FormalContext) -> Vec<Implication> {
    let mut basis: Vec<Implication> = Vec::new();
    let mut current = ctx.empty_attrs();
    loop {
        let closed = ctx.closure(&current);
        if closed != current {
            basis.push(Implication {
                conclusion: closed.difference(&current),
                premise: current.clone(),
            });
        }
        match next_closure(&current, |b| closure_under(b, &basis, true)) {
            Some(next) => current = next,
            None => return basis,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(ctx: &FormalContext, sets: &[AttrSet]) -> Vec<String> {
        sets.iter().map(|s| ctx.names_of(s).concat()).collect()
    }

    #[test]
    fn toy_pseudo_intents() {
        let ctx = fixtures::geometric_figures();
        let mut got = names(&ctx, &enumerate_pseudo_intents(&ctx));
        got.sort();
        assert_eq!(got, vec!["abc", "b", "cd", "e"]);
    }

    #[test]
    fn toy_intents_are_lectic() {
        let ctx = fixtures::geometric_figures();
        let intents = enumerate_intents(&ctx);
        for w in intents.windows(2) {
            assert!(w[0].lectic_cmp(&w[1]).is_lt());
        }
        assert!(intents.contains(&ctx.attrs(&["b", "c"])));
        assert!(intents.contains(&ctx.all_attrs()));
    }

    #[test]
    fn nominal_scale() {
        let ctx = fixtures::nominal_scale(3);
        assert_eq!(enumerate_intents(&ctx).len(), 5);
        let basis = dg_basis(&ctx);
        assert_eq!(basis.len(), 3);
        for imp in &basis {
            assert_eq!(imp.premise.len(), 2);
            assert_eq!(imp.conclusion.len(), 1);
            assert!(imp.premise.is_disjoint(&imp.conclusion));
        }
    }

    #[test]
    fn boolean_has_empty_basis() {
        let ctx = fixtures::boolean(4);
        assert_eq!(enumerate_intents(&ctx).len(), 16);
        assert!(dg_basis(&ctx).is_empty());
    }

    #[test]
    fn no_attributes() {
        let ctx = FormalContext::from_fn(2, 0, |_, _| false);
        assert_eq!(enumerate_intents(&ctx), vec![AttrSet::empty(0)]);
        assert!(enumerate_pseudo_intents(&ctx).is_empty());
    }

    #[test]
    fn empty_set_pseudo_intent_when_not_closed() {
        // every object has m1, so ∅'' = {m1}
        let ctx = fixtures::staircase(3);
        let pi = enumerate_pseudo_intents(&ctx);
        assert_eq!(pi[0], ctx.empty_attrs());
    }
}
