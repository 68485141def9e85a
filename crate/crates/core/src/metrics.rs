//! Numeric characteristics of a context: class totals, size histograms and
//! the two lattice indices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::AttrSet;
use crate::charsets::{enumerate_intents, enumerate_pseudo_intents, KeyIndex};
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::lattice::ConceptLattice;
use crate::num::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Intents,
    PseudoIntents,
    ProperPremises,
    Keys,
    Passkeys,
    Linearity,
    Distributivity,
}

impl Metric {
    pub const ALL: [Metric; 7] = [
        Metric::Intents,
        Metric::PseudoIntents,
        Metric::ProperPremises,
        Metric::Keys,
        Metric::Passkeys,
        Metric::Linearity,
        Metric::Distributivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Intents => "intents",
            Metric::PseudoIntents => "pseudo_intents",
            Metric::ProperPremises => "proper_premises",
            Metric::Keys => "keys",
            Metric::Passkeys => "passkeys",
            Metric::Linearity => "linearity",
            Metric::Distributivity => "distributivity",
        }
    }

    /// Whether the metric counts attribute sets (and so has a size histogram).
    pub fn is_class(self) -> bool {
        !matches!(self, Metric::Linearity | Metric::Distributivity)
    }

    /// Parses a comma-separated list; `all` selects every metric.
    pub fn parse_list(s: &str) -> Result<Vec<Metric>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                return Ok(Metric::ALL.to_vec());
            }
            let m: Metric = part.parse()?;
            if !out.contains(&m) {
                out.push(m);
            }
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == norm || m.name().trim_end_matches('s') == norm)
            .or(match norm.as_str() {
                "concepts" | "closed" => Some(Metric::Intents),
                "lin" => Some(Metric::Linearity),
                "dist" => Some(Metric::Distributivity),
                _ => None,
            })
            .ok_or_else(|| Error::Invalid(format!("unknown metric {s:?}")))
    }
}

/// A metric, optionally restricted to attribute sets of one size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MetricKey {
    pub metric: Metric,
    pub size: Option<usize>,
}

/// The characteristic sets of one context, computed once and shared by
/// every metric.
#[derive(Clone, Debug, Default)]
pub struct ClassSets {
    pub intents: Option<Vec<AttrSet>>,
    pub pseudo_intents: Option<Vec<AttrSet>>,
    pub keys: Option<KeyIndex>,
    pub proper_premises: Option<Vec<AttrSet>>,
    pub passkeys: Option<Vec<AttrSet>>,
}

impl ClassSets {
    pub fn compute(ctx: &FormalContext, metrics: &[Metric]) -> Self {
        let wants = |m: Metric| metrics.contains(&m);
        let mut out = ClassSets::default();
        if wants(Metric::Intents) || wants(Metric::Linearity) || wants(Metric::Distributivity) {
            out.intents = Some(enumerate_intents(ctx));
        }
        if wants(Metric::PseudoIntents) {
            out.pseudo_intents = Some(enumerate_pseudo_intents(ctx));
        }
        if wants(Metric::Keys) || wants(Metric::Passkeys) || wants(Metric::ProperPremises) {
            let idx = KeyIndex::build(ctx);
            if wants(Metric::ProperPremises) {
                out.proper_premises = Some(idx.proper_premises(ctx));
            }
            if wants(Metric::Passkeys) {
                out.passkeys = Some(idx.passkeys());
            }
            out.keys = Some(idx);
        }
        out
    }

    pub fn sets(&self, metric: Metric) -> Option<&[AttrSet]> {
        match metric {
            Metric::Intents => self.intents.as_deref(),
            Metric::PseudoIntents => self.pseudo_intents.as_deref(),
            Metric::ProperPremises => self.proper_premises.as_deref(),
            Metric::Keys => self.keys.as_ref().map(|k| k.keys.as_slice()),
            Metric::Passkeys => self.passkeys.as_deref(),
            Metric::Linearity | Metric::Distributivity => None,
        }
    }
}

/// Number of sets of each size `0..=n_attributes`.
pub fn size_histogram(sets: &[AttrSet], n_attributes: usize) -> Vec<u64> {
    let mut h = vec![0u64; n_attributes + 1];
    for s in sets {
        h[s.len()] += 1;
    }
    h
}

/// Evaluates `metrics` on `ctx`. Class metrics yield a total plus one
/// entry per size `0..=|M|`; indices yield one entry each.
pub fn measure<T: Scalar>(ctx: &FormalContext, metrics: &[Metric]) -> Vec<(MetricKey, T)> {
    let sets = ClassSets::compute(ctx, metrics);
    let lattice =
        if metrics.contains(&Metric::Linearity) || metrics.contains(&Metric::Distributivity) {
            Some(
                ConceptLattice::build(sets.intents.clone().expect("intents computed"))
                    .expect("enumerated intents are distinct"),
            )
        } else {
            None
        };

    let mut out = Vec::new();
    let mut sorted = metrics.to_vec();
    sorted.sort();
    sorted.dedup();
    for metric in sorted {
        match metric {
            Metric::Linearity => out.push((
                MetricKey { metric, size: None },
                lattice.as_ref().expect("lattice built").linearity(),
            )),
            Metric::Distributivity => out.push((
                MetricKey { metric, size: None },
                lattice.as_ref().expect("lattice built").distributivity(),
            )),
            _ => {
                let s = sets.sets(metric).expect("class computed");
                out.push((
                    MetricKey { metric, size: None },
                    T::from_count(s.len() as u64),
                ));
                for (size, count) in size_histogram(s, ctx.n_attributes())
                    .into_iter()
                    .enumerate()
                {
                    out.push((
                        MetricKey {
                            metric,
                            size: Some(size),
                        },
                        T::from_count(count),
                    ));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_metric_lists() {
        assert_eq!(Metric::parse_list("all").unwrap(), Metric::ALL.to_vec());
        assert_eq!(
            Metric::parse_list("keys, intent,keys").unwrap(),
            vec![Metric::Intents, Metric::Keys]
        );
        assert!(Metric::parse_list("bogus").is_err());
    }

    #[test]
    fn toy_measurements() {
        let ctx = fixtures::geometric_figures();
        let m: Vec<(MetricKey, f64)> = measure(&ctx, &[Metric::PseudoIntents, Metric::Linearity]);
        let total = m
            .iter()
            .find(|(k, _)| k.metric == Metric::PseudoIntents && k.size.is_none())
            .unwrap()
            .1;
        assert_eq!(total, 4.0);
        // {b}, {e} | {c,d} | {a,b,c}
        let sizes: Vec<f64> = m
            .iter()
            .filter(|(k, _)| k.metric == Metric::PseudoIntents && k.size.is_some())
            .map(|(_, v)| *v)
            .collect();
        assert_eq!(sizes, vec![0.0, 2.0, 1.0, 1.0, 0.0, 0.0]);
        assert_eq!(m.last().unwrap().0.metric, Metric::Linearity);
    }
}
