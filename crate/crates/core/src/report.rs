//! Serializable reports emitted by the command-line tool.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::context::FormalContext;
use crate::descmap::{describe_grouped, DescriptionRow};
use crate::error::Result;
use crate::lattice::ConceptLattice;
use crate::metrics::{size_histogram, ClassSets, Metric};
use crate::randomize::{self, RandomizationStrategy, TrialDigest, TrialSummary};

/// Bumped whenever a report layout changes.
pub const SCHEMA_VERSION: u32 = 1;
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatasetInfo {
    pub name: String,
    pub objects: usize,
    pub attributes: usize,
    pub crosses: usize,
    pub density: f64,
}

impl DatasetInfo {
    pub fn of(ctx: &FormalContext, name: &str) -> Self {
        DatasetInfo {
            name: name.to_string(),
            objects: ctx.n_objects(),
            attributes: ctx.n_attributes(),
            crosses: ctx.cross_count(),
            density: ctx.density(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTotals {
    pub intents: u64,
    pub pseudo_intents: u64,
    pub proper_premises: u64,
    pub keys: u64,
    pub passkeys: u64,
}

/// Entry `k` of each list counts the sets of size `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassHistograms {
    pub intents: Vec<u64>,
    pub pseudo_intents: Vec<u64>,
    pub proper_premises: Vec<u64>,
    pub keys: Vec<u64>,
    pub passkeys: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub engine_version: String,
    pub dataset: DatasetInfo,
    pub totals: ClassTotals,
    pub histograms: ClassHistograms,
    pub linearity: f64,
    pub distributivity: f64,
    pub seeds: Vec<u64>,
}

const CLASS_METRICS: [Metric; 5] = [
    Metric::Intents,
    Metric::PseudoIntents,
    Metric::ProperPremises,
    Metric::Keys,
    Metric::Passkeys,
];

pub fn analyze(ctx: &FormalContext, name: &str) -> AnalysisReport {
    let sets = ClassSets::compute(ctx, &Metric::ALL);
    let n = ctx.n_attributes();
    let hist = |m: Metric| size_histogram(sets.sets(m).expect("all classes computed"), n);
    let total = |m: Metric| sets.sets(m).expect("all classes computed").len() as u64;
    let lattice = ConceptLattice::build(sets.intents.clone().expect("intents computed"))
        .expect("enumerated intents are distinct");
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        engine_version: ENGINE_VERSION.to_string(),
        dataset: DatasetInfo::of(ctx, name),
        totals: ClassTotals {
            intents: total(Metric::Intents),
            pseudo_intents: total(Metric::PseudoIntents),
            proper_premises: total(Metric::ProperPremises),
            keys: total(Metric::Keys),
            passkeys: total(Metric::Passkeys),
        },
        histograms: ClassHistograms {
            intents: hist(Metric::Intents),
            pseudo_intents: hist(Metric::PseudoIntents),
            proper_premises: hist(Metric::ProperPremises),
            keys: hist(Metric::Keys),
            passkeys: hist(Metric::Passkeys),
        },
        linearity: lattice.linearity(),
        distributivity: lattice.distributivity(),
        seeds: Vec::new(),
    }
}

impl AnalysisReport {
    pub fn histogram(&self, metric: Metric) -> Option<&[u64]> {
        let h = &self.histograms;
        Some(match metric {
            Metric::Intents => &h.intents,
            Metric::PseudoIntents => &h.pseudo_intents,
            Metric::ProperPremises => &h.proper_premises,
            Metric::Keys => &h.keys,
            Metric::Passkeys => &h.passkeys,
            _ => return None,
        })
    }

    /// `class,size,count` rows, one per class and size.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,size,count\n");
        for m in CLASS_METRICS {
            for (size, count) in self.histogram(m).expect("class metric").iter().enumerate() {
                let _ = writeln!(out, "{m},{size},{count}");
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndicesReport {
    pub schema_version: u32,
    pub engine_version: String,
    pub dataset: DatasetInfo,
    pub concepts: u64,
    pub linearity: f64,
    pub distributivity: f64,
    pub comparable_pairs: u64,
    pub union_closed_pairs: u64,
    pub pairs: u64,
}

pub fn indices(ctx: &FormalContext, name: &str) -> IndicesReport {
    let lat = ConceptLattice::from_context(ctx);
    IndicesReport {
        schema_version: SCHEMA_VERSION,
        engine_version: ENGINE_VERSION.to_string(),
        dataset: DatasetInfo::of(ctx, name),
        concepts: lat.len() as u64,
        linearity: lat.linearity(),
        distributivity: lat.distributivity(),
        comparable_pairs: lat.comparable_pairs(),
        union_closed_pairs: lat.union_closed_pairs(),
        pairs: lat.pair_count(),
    }
}

/// Grouped descriptions context: one row per distinct flag combination.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DescriptionReport {
    pub schema_version: u32,
    pub engine_version: String,
    pub dataset: DatasetInfo,
    pub subsets: u64,
    pub rows: Vec<DescriptionRow>,
}

pub fn descriptions(ctx: &FormalContext, name: &str) -> Result<DescriptionReport> {
    let rows = describe_grouped(ctx)?;
    Ok(DescriptionReport {
        schema_version: SCHEMA_VERSION,
        engine_version: ENGINE_VERSION.to_string(),
        dataset: DatasetInfo::of(ctx, name),
        subsets: 1 << ctx.n_attributes(),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomizationReport {
    pub schema_version: u32,
    pub engine_version: String,
    pub prng: String,
    pub dataset: DatasetInfo,
    pub strategy: RandomizationStrategy,
    pub trials: usize,
    pub seed: u64,
    pub summaries: Vec<TrialSummary<f64>>,
    pub digests: Vec<TrialDigest>,
}

pub fn randomization(
    ctx: &FormalContext,
    name: &str,
    strategy: RandomizationStrategy,
    trials: usize,
    seed: u64,
    metrics: &[Metric],
) -> Result<RandomizationReport> {
    Ok(RandomizationReport {
        schema_version: SCHEMA_VERSION,
        engine_version: ENGINE_VERSION.to_string(),
        prng: randomize::PRNG.to_string(),
        dataset: DatasetInfo::of(ctx, name),
        strategy,
        trials,
        seed,
        summaries: randomize::run_trials(ctx, strategy, trials, seed, metrics)?,
        digests: randomize::trial_digests(ctx, strategy, trials, seed),
    })
}

impl RandomizationReport {
    /// Plot-ready rows: `metric,size,real,min,q1,median,q3,max`; `size` is
    /// empty for totals and indices.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("metric,size,real,min,q1,median,q3,max\n");
        for s in &self.summaries {
            let q = &s.quartiles;
            let size = s.size.map(|k| k.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                s.metric, size, s.real_value, q.min, q.q1, q.median, q.q3, q.max
            );
        }
        out
    }

    pub fn summary(&self, metric: Metric, size: Option<usize>) -> Option<&TrialSummary<f64>> {
        self.summaries
            .iter()
            .find(|s| s.metric == metric && s.size == size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn toy_analysis() {
        let r = analyze(&fixtures::geometric_figures(), "toy");
        assert_eq!(r.totals.pseudo_intents, 4);
        assert_eq!(r.histograms.intents.iter().sum::<u64>(), r.totals.intents);
        assert_eq!(r.histograms.keys.iter().sum::<u64>(), r.totals.keys);
        assert_eq!(r.dataset.crosses, 9);
        assert!((r.dataset.density - 9.0 / 20.0).abs() < 1e-12);
        assert!(r.to_csv().starts_with("class,size,count\nintents,0,1\n"));
    }

    #[test]
    fn empty_context_analysis() {
        let ctx = FormalContext::from_fn(0, 0, |_, _| false);
        let r = analyze(&ctx, "empty");
        assert_eq!(
            r.totals,
            ClassTotals {
                intents: 1,
                pseudo_intents: 0,
                proper_premises: 0,
                keys: 1,
                passkeys: 1
            }
        );
        assert_eq!(r.linearity, 1.0);
        assert_eq!(r.dataset.density, 0.0);
    }

    #[test]
    fn toy_descriptions_cover_power_set() {
        let r = descriptions(&fixtures::geometric_figures(), "toy").unwrap();
        assert_eq!(r.subsets, 32);
        assert_eq!(r.rows.iter().map(|row| row.count).sum::<u64>(), 32);
    }

    #[test]
    fn nominal_indices() {
        let r = indices(&fixtures::nominal_scale(3), "nominal");
        assert_eq!(
            (r.comparable_pairs, r.union_closed_pairs, r.pairs),
            (7, 7, 10)
        );
        assert!((r.linearity - 0.7).abs() < 1e-12);
    }
}
