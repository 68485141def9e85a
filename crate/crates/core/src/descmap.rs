//! The descriptions context: every attribute subset classified by the
//! characteristic classes it belongs to, grouped into distinct flag
//! combinations with multiplicities.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::AttrSet;
use crate::charsets::oracle::check_capacity;
use crate::charsets::{CharFlags, Classifier};
use crate::context::FormalContext;
use crate::error::Result;
use crate::fixtures::DESCRIPTION_COLUMNS;

/// One distinct flag combination and the number of subsets showing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptionRow {
    pub flags: CharFlags,
    pub count: u64,
}

impl DescriptionRow {
    /// The nine exported columns, alias columns included.
    pub fn columns(&self) -> [bool; 9] {
        let f = &self.flags;
        [
            f.is_generator,
            f.is_intent,
            f.is_key,
            f.is_passkey,
            f.is_pseudo_intent,
            f.is_proper_premise,
            f.is_key,
            f.is_passkey,
            f.is_intent,
        ]
    }
}

/// Streams `(subset, flags)` for every subset of the attributes, in lectic order.
pub struct DescriptionStream<'a> {
    classifier: Classifier<'a>,
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for DescriptionStream<'_> {
    type Item = (AttrSet, CharFlags);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let b = AttrSet::from_lectic_rank(self.n, self.next);
        self.next += 1;
        let flags = self.classifier.classify(&b);
        Some((b, flags))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for DescriptionStream<'_> {}

pub fn build_descriptions_context(ctx: &FormalContext) -> Result<DescriptionStream<'_>> {
    check_capacity(ctx, "descriptions context")?;
    Ok(DescriptionStream {
        classifier: Classifier::new(ctx),
        n: ctx.n_attributes(),
        next: 0,
        end: 1u64 << ctx.n_attributes(),
    })
}

/// Collapses a stream of classified subsets into distinct flag rows.
pub fn group_descriptions<I>(stream: I) -> Vec<DescriptionRow>
where
    I: IntoIterator<Item = (AttrSet, CharFlags)>,
{
    let mut counts: HashMap<CharFlags, u64> = HashMap::new();
    for (_, flags) in stream {
        *counts.entry(flags).or_default() += 1;
    }
    sorted_rows(counts)
}

/// Same result as grouping [`build_descriptions_context`], computed in
/// parallel over lectic ranges.
pub fn describe_grouped(ctx: &FormalContext) -> Result<Vec<DescriptionRow>> {
    check_capacity(ctx, "descriptions context")?;
    let classifier = Classifier::new(ctx);
    let n = ctx.n_attributes();
    const CHUNK: u64 = 1 << 12;
    let total = 1u64 << n;
    let chunks = total.div_ceil(CHUNK);
    let counts = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local: HashMap<CharFlags, u64> = HashMap::new();
            for rank in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let b = AttrSet::from_lectic_rank(n, rank);
                *local.entry(classifier.classify(&b)).or_default() += 1;
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(sorted_rows(counts))
}

fn sorted_rows(counts: HashMap<CharFlags, u64>) -> Vec<DescriptionRow> {
    let mut rows: Vec<DescriptionRow> = counts
        .into_iter()
        .map(|(flags, count)| DescriptionRow { flags, count })
        .collect();
    // lexicographic on the flags is a linear extension of flag-set inclusion
    rows.sort_by(|a, b| {
        b.flags
            .rank_key()
            .cmp(&a.flags.rank_key())
            .then(b.count.cmp(&a.count))
    });
    rows
}

/// Context whose objects are the grouped rows (named by count) and whose
/// attributes are the nine description columns.
pub fn export_description_lattice_context(rows: &[DescriptionRow]) -> FormalContext {
    let mut names: Vec<String> = Vec::with_capacity(rows.len());
    let mut seen: HashMap<u64, usize> = HashMap::new();
    for r in rows {
        let k = seen.entry(r.count).or_default();
        *k += 1;
        names.push(if *k == 1 {
            r.count.to_string()
        } else {
            format!("{} ({})", r.count, k)
        });
    }
    let grid = rows
        .iter()
        .map(|r| {
            AttrSet::from_indices(
                9,
                r.columns()
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x)
                    .map(|(i, _)| i),
            )
        })
        .collect();
    FormalContext::new(
        names,
        DESCRIPTION_COLUMNS.iter().map(|s| s.to_string()).collect(),
        grid,
    )
    .expect("row names are disambiguated")
}

/// Grouped rows as CSV: a count column followed by the nine 0/1 columns.
pub fn write_grouped_csv(rows: &[DescriptionRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(std::iter::once("descriptions").chain(DESCRIPTION_COLUMNS))
        .expect("writing to memory");
    for r in rows {
        let count = r.count.to_string();
        let cells = r.columns().map(|x| if x { "1" } else { "0" });
        w.write_record(std::iter::once(count.as_str()).chain(cells))
            .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii output")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charsets::{brute_force_class, CharClass};
    use crate::fixtures;

    fn flags_from_oracle(ctx: &FormalContext) -> HashMap<AttrSet, CharFlags> {
        let mut map: HashMap<AttrSet, CharFlags> = HashMap::new();
        for class in CharClass::ALL {
            for s in brute_force_class(ctx, class).unwrap() {
                let f = map.entry(s).or_default();
                match class {
                    CharClass::Generator => f.is_generator = true,
                    CharClass::Intent => f.is_intent = true,
                    CharClass::PseudoIntent => f.is_pseudo_intent = true,
                    CharClass::Key => f.is_key = true,
                    CharClass::Passkey => f.is_passkey = true,
                    CharClass::ProperPremise => f.is_proper_premise = true,
                }
            }
        }
        map
    }

    #[test]
    fn toy_stream_matches_oracle() {
        let ctx = fixtures::geometric_figures();
        let oracle = flags_from_oracle(&ctx);
        let records: Vec<_> = build_descriptions_context(&ctx).unwrap().collect();
        assert_eq!(records.len(), 32);
        for (b, f) in &records {
            assert_eq!(oracle[b], *f, "{b:?}");
        }
        let e = &records[AttrSet::from_indices(5, [4]).lectic_rank() as usize];
        assert!(e.1.is_pseudo_intent && e.1.is_key && e.1.is_passkey && e.1.is_proper_premise);
        let rows = group_descriptions(records);
        assert_eq!(rows.iter().map(|r| r.count).sum::<u64>(), 32);
        assert_eq!(rows, describe_grouped(&ctx).unwrap());
    }

    #[test]
    fn single_universal_attribute() {
        let ctx = FormalContext::from_fn(2, 1, |_, _| true);
        let records: Vec<_> = build_descriptions_context(&ctx).unwrap().collect();
        assert_eq!(records.len(), 2);
        assert!(!records[0].1.is_intent);
        assert!(records[1].1.is_intent);
        // ∅'' = {m1}: ∅ is a pseudo-intent, {m1} the closed one
        assert!(records[0].1.is_pseudo_intent);
    }

    #[test]
    fn boolean_is_one_row() {
        let rows = describe_grouped(&fixtures::boolean(4)).unwrap();
        assert_eq!(
            rows,
            vec![DescriptionRow {
                flags: CharFlags {
                    is_generator: true,
                    is_intent: true,
                    is_key: true,
                    is_passkey: true,
                    ..Default::default()
                },
                count: 16
            }]
        );
    }

    #[test]
    fn export_reproduces_grid() {
        let grid = fixtures::bob_ross_descriptions_grid();
        let rows: Vec<DescriptionRow> = grid
            .rows()
            .iter()
            .zip(fixtures::BOB_ROSS_GROUP_COUNTS)
            .map(|(r, count)| DescriptionRow {
                flags: CharFlags {
                    is_generator: r.contains(0),
                    is_intent: r.contains(8),
                    is_key: r.contains(6),
                    is_passkey: r.contains(7),
                    is_pseudo_intent: r.contains(4),
                    is_proper_premise: r.contains(5),
                },
                count,
            })
            .collect();
        let mut shuffled = rows.clone();
        shuffled.reverse();
        let counts: HashMap<CharFlags, u64> = shuffled.iter().map(|r| (r.flags, r.count)).collect();
        let sorted = sorted_rows(counts);
        assert_eq!(sorted, rows, "ordering follows the published table");
        let ctx = export_description_lattice_context(&sorted);
        assert_eq!(ctx, grid);
        assert_eq!(ctx.cross_count(), 35);
    }

    #[test]
    fn single_row_export() {
        let ctx = export_description_lattice_context(&[DescriptionRow {
            flags: CharFlags {
                is_generator: true,
                ..Default::default()
            },
            count: 4,
        }]);
        assert_eq!(ctx.n_objects(), 1);
        assert_eq!(ctx.n_attributes(), 9);
    }

    #[test]
    fn duplicate_counts_get_distinct_names() {
        let row = |intent| DescriptionRow {
            flags: CharFlags {
                is_generator: true,
                is_intent: intent,
                ..Default::default()
            },
            count: 3,
        };
        let ctx = export_description_lattice_context(&[row(true), row(false)]);
        assert_eq!(ctx.object_names(), &["3", "3 (2)"]);
    }

    #[test]
    fn csv_layout() {
        let rows = describe_grouped(&fixtures::nominal_scale(3)).unwrap();
        let text = write_grouped_csv(&rows);
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "descriptions,is generator,is closed descr,is minimal gen,is minimum gen,\
             is pseudo intent,is proper premise,is key,is passkey,is intent"
        );
        assert_eq!(lines.count(), rows.len());
    }
}
