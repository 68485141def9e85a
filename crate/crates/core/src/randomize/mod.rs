//! Randomized counterparts of a context and real-versus-random metric
//! distributions.
//!
//! Trial `i` of a run seeded with `s` draws from a ChaCha8 generator seeded
//! with [`trial_seed`]`(s, i)`, so trials are reproducible one by one and
//! independent of scheduling.

mod stats;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use self::stats::{summarize, Quartiles};

use crate::bitset::AttrSet;
use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::metrics::{measure, Metric};
use crate::num::Scalar;

/// Name of the generator behind every randomization, for report metadata.
pub const PRNG: &str = "ChaCha8Rng (rand_chacha 0.3), seed_from_u64(splitmix64 trial seed)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RandomizationStrategy {
    /// Same shape and cross count, crosses placed uniformly at random.
    Density,
    /// Same shape and column sums, each column permuted independently.
    ColumnPermutation,
}

impl RandomizationStrategy {
    pub fn name(self) -> &'static str {
        match self {
            RandomizationStrategy::Density => "density",
            RandomizationStrategy::ColumnPermutation => "column",
        }
    }

    pub fn apply(self, ctx: &FormalContext, seed: u64) -> FormalContext {
        match self {
            RandomizationStrategy::Density => density_shuffle(ctx, seed),
            RandomizationStrategy::ColumnPermutation => column_shuffle(ctx, seed),
        }
    }
}

impl fmt::Display for RandomizationStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RandomizationStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "density" => Ok(RandomizationStrategy::Density),
            "column" | "column-permutation" | "column_permutation" => {
                Ok(RandomizationStrategy::ColumnPermutation)
            }
            other => Err(Error::Invalid(format!("unknown strategy {other:?}"))),
        }
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `trial` in a run seeded with `seed`:
/// `splitmix64(seed + splitmix64(trial + 1))`, wrapping.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    splitmix64(seed.wrapping_add(splitmix64(trial.wrapping_add(1))))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Moves a uniformly random `k`-subset of `items` to the front.
fn partial_fisher_yates<R: Rng>(items: &mut [usize], k: usize, rng: &mut R) {
    let n = items.len();
    for i in 0..k.min(n) {
        let j = rng.gen_range(i..n);
        items.swap(i, j);
    }
}

/// Places the same number of crosses on a uniformly random set of cells.
pub fn density_shuffle(ctx: &FormalContext, seed: u64) -> FormalContext {
    let (g, m) = (ctx.n_objects(), ctx.n_attributes());
    let mut cells: Vec<usize> = (0..g * m).collect();
    let k = ctx.cross_count();
    partial_fisher_yates(&mut cells, k, &mut rng(seed));
    let mut rows = vec![AttrSet::empty(m); g];
    for &cell in &cells[..k] {
        rows[cell / m].insert(cell % m);
    }
    ctx.with_rows(rows).expect("shape unchanged")
}

/// Redistributes the crosses of every column over uniformly random rows,
/// columns independently.
pub fn column_shuffle(ctx: &FormalContext, seed: u64) -> FormalContext {
    let (g, m) = (ctx.n_objects(), ctx.n_attributes());
    let mut rng = rng(seed);
    let mut rows = vec![AttrSet::empty(m); g];
    let mut objects: Vec<usize> = (0..g).collect();
    for col in 0..m {
        let k = ctx.column(col).len();
        objects.sort_unstable();
        partial_fisher_yates(&mut objects, k, &mut rng);
        for &obj in &objects[..k] {
            rows[obj].insert(col);
        }
    }
    ctx.with_rows(rows).expect("shape unchanged")
}

/// Real value and per-trial values of one metric.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary<T> {
    pub metric: Metric,
    /// Restriction to sets of this size, for class metrics.
    pub size: Option<usize>,
    pub real_value: T,
    pub trial_values: Vec<T>,
    pub quartiles: Quartiles<T>,
}

/// Shape of one randomized context, for invariant checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialDigest {
    pub trial: u64,
    pub seed: u64,
    pub crosses: usize,
    pub column_sums: Vec<usize>,
}

/// Randomized contexts of a run, in trial order.
pub fn trial_contexts(
    ctx: &FormalContext,
    strategy: RandomizationStrategy,
    n_trials: usize,
    seed: u64,
) -> Vec<FormalContext> {
    (0..n_trials as u64)
        .into_par_iter()
        .map(|i| strategy.apply(ctx, trial_seed(seed, i)))
        .collect()
}

pub fn trial_digests(
    ctx: &FormalContext,
    strategy: RandomizationStrategy,
    n_trials: usize,
    seed: u64,
) -> Vec<TrialDigest> {
    trial_contexts(ctx, strategy, n_trials, seed)
        .iter()
        .enumerate()
        .map(|(i, c)| TrialDigest {
            trial: i as u64,
            seed: trial_seed(seed, i as u64),
            crosses: c.cross_count(),
            column_sums: c.column_sums(),
        })
        .collect()
}

/// Evaluates `metrics` on `ctx` and on `n_trials` randomized copies.
pub fn run_trials<T: Scalar>(
    ctx: &FormalContext,
    strategy: RandomizationStrategy,
    n_trials: usize,
    seed: u64,
    metrics: &[Metric],
) -> Result<Vec<TrialSummary<T>>> {
    if n_trials == 0 {
        return Err(Error::Invalid("at least one trial is required".into()));
    }
    let real = measure::<T>(ctx, metrics);
    let trials: Vec<Vec<T>> = (0..n_trials as u64)
        .into_par_iter()
        .map(|i| {
            let randomized = strategy.apply(ctx, trial_seed(seed, i));
            measure::<T>(&randomized, metrics)
                .into_iter()
                .map(|(_, v)| v)
                .collect()
        })
        .collect();

    real.into_iter()
        .enumerate()
        .map(|(k, (key, real_value))| {
            let trial_values: Vec<T> = trials.iter().map(|t| t[k]).collect();
            Ok(TrialSummary {
                metric: key.metric,
                size: key.size,
                real_value,
                quartiles: summarize(&trial_values)?,
                trial_values,
            })
        })
        .collect()
}
