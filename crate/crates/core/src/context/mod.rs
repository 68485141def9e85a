//! Binary formal contexts, the two derivation operators and the closure
//! operator they induce.

mod cxt;
mod dense;

use std::collections::{HashMap, HashSet};

pub use self::cxt::{parse_burmeister, write_burmeister};
pub use self::dense::{parse_dense_csv, parse_dense_csv_with, write_dense_csv, CsvOptions};

use crate::bitset::{AttrSet, ObjSet};
use crate::error::{Error, Result};

/// Objects, attributes and the incidence relation between them.
///
/// Immutable once built. Each row holds the attributes of one object; the
/// per-attribute columns are cached alongside.
#[derive(Clone, Debug)]
pub struct FormalContext {
    object_names: Vec<String>,
    attribute_names: Vec<String>,
    rows: Vec<AttrSet>,
    columns: Vec<ObjSet>,
}

impl PartialEq for FormalContext {
    fn eq(&self, other: &Self) -> bool {
        self.object_names == other.object_names
            && self.attribute_names == other.attribute_names
            && self.rows == other.rows
    }
}

impl Eq for FormalContext {}

fn check_unique(kind: &'static str, names: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(names.len());
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::DuplicateName {
                kind,
                name: n.clone(),
            });
        }
    }
    Ok(())
}

impl FormalContext {
    pub fn new(
        object_names: Vec<String>,
        attribute_names: Vec<String>,
        rows: Vec<AttrSet>,
    ) -> Result<Self> {
        if rows.len() != object_names.len() {
            return Err(Error::Invalid(format!(
                "{} rows for {} objects",
                rows.len(),
                object_names.len()
            )));
        }
        let m = attribute_names.len();
        if let Some(bad) = rows.iter().position(|r| r.universe() != m) {
            return Err(Error::Invalid(format!(
                "row {bad} is sized for {} attributes, context has {m}",
                rows[bad].universe()
            )));
        }
        check_unique("object", &object_names)?;
        check_unique("attribute", &attribute_names)?;

        let g = rows.len();
        let mut columns = vec![ObjSet::empty(g); m];
        for (gi, row) in rows.iter().enumerate() {
            for mi in row {
                columns[mi].insert(gi);
            }
        }
        Ok(FormalContext {
            object_names,
            attribute_names,
            rows,
            columns,
        })
    }

    /// Builds a context with generated names `g1..` and `m1..`.
    pub fn from_fn(
        n_objects: usize,
        n_attributes: usize,
        mut incidence: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let rows = (0..n_objects)
            .map(|g| {
                AttrSet::from_indices(n_attributes, (0..n_attributes).filter(|&m| incidence(g, m)))
            })
            .collect();
        Self::new(
            (1..=n_objects).map(|i| format!("g{i}")).collect(),
            (1..=n_attributes).map(|i| format!("m{i}")).collect(),
            rows,
        )
        .expect("generated names are unique")
    }

    /// Same shape and names as `self`, new incidence.
    pub fn with_rows(&self, rows: Vec<AttrSet>) -> Result<Self> {
        Self::new(
            self.object_names.clone(),
            self.attribute_names.clone(),
            rows,
        )
    }

    pub fn object_names(&self) -> &[String] {
        &self.object_names
    }

    pub fn attribute_names(&self) -> &[String] {
        &self.attribute_names
    }

    pub fn rows(&self) -> &[AttrSet] {
        &self.rows
    }

    /// Objects having attribute `m`.
    pub fn column(&self, m: usize) -> &ObjSet {
        &self.columns[m]
    }

    pub fn n_objects(&self) -> usize {
        self.rows.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.attribute_names.len()
    }

    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    /// Total number of crosses.
    pub fn cross_count(&self) -> usize {
        self.rows.iter().map(AttrSet::len).sum()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        self.columns.iter().map(ObjSet::len).collect()
    }

    /// Fraction of incident cells; 0 for a context without cells.
    pub fn density(&self) -> f64 {
        let cells = self.n_objects() * self.n_attributes();
        if cells == 0 {
            0.0
        } else {
            self.cross_count() as f64 / cells as f64
        }
    }

    pub fn empty_attrs(&self) -> AttrSet {
        AttrSet::empty(self.n_attributes())
    }

    pub fn all_attrs(&self) -> AttrSet {
        AttrSet::full(self.n_attributes())
    }

    /// Objects whose rows contain every attribute of `attrs`.
    pub fn extent(&self, attrs: &AttrSet) -> ObjSet {
        let mut objs = ObjSet::full(self.n_objects());
        for m in attrs {
            objs.intersect_with(&self.columns[m]);
        }
        objs
    }

    /// Attributes shared by every object of `objs`; all attributes for the empty set.
    pub fn intent_of(&self, objs: &ObjSet) -> AttrSet {
        let mut attrs = self.all_attrs();
        for g in objs {
            attrs.intersect_with(&self.rows[g]);
        }
        attrs
    }

    pub fn closure(&self, attrs: &AttrSet) -> AttrSet {
        self.intent_of(&self.extent(attrs))
    }

    pub fn is_closed(&self, attrs: &AttrSet) -> bool {
        self.closure(attrs) == *attrs
    }

    /// Merges duplicate rows, keeping the first occurrence.
    pub fn clarify_rows(&self) -> Clarified {
        let mut first_seen: HashMap<&AttrSet, usize> = HashMap::new();
        let mut names = Vec::new();
        let mut rows = Vec::new();
        let mut multiplicities: Vec<usize> = Vec::new();
        let mut merged_names: Vec<Vec<String>> = Vec::new();
        for (g, row) in self.rows.iter().enumerate() {
            match first_seen.get(row) {
                Some(&k) => {
                    multiplicities[k] += 1;
                    merged_names[k].push(self.object_names[g].clone());
                }
                None => {
                    first_seen.insert(row, rows.len());
                    names.push(self.object_names[g].clone());
                    rows.push(row.clone());
                    multiplicities.push(1);
                    merged_names.push(vec![self.object_names[g].clone()]);
                }
            }
        }
        Clarified {
            context: self
                .with_subset_of_objects(names, rows)
                .expect("kept names are a subset of unique names"),
            multiplicities,
            merged_names,
        }
    }

    fn with_subset_of_objects(&self, names: Vec<String>, rows: Vec<AttrSet>) -> Result<Self> {
        Self::new(names, self.attribute_names.clone(), rows)
    }

    /// Keeps only the first `n` attributes.
    pub fn truncate_attributes(&self, n: usize) -> Self {
        if n >= self.n_attributes() {
            return self.clone();
        }
        let rows = self
            .rows
            .iter()
            .map(|r| AttrSet::from_indices(n, r.iter().take_while(|&m| m < n)))
            .collect();
        Self::new(
            self.object_names.clone(),
            self.attribute_names[..n].to_vec(),
            rows,
        )
        .expect("prefix of unique names is unique")
    }

    /// Attribute names of `attrs`, in attribute order.
    pub fn names_of(&self, attrs: &AttrSet) -> Vec<&str> {
        attrs
            .iter()
            .map(|m| self.attribute_names[m].as_str())
            .collect()
    }

    /// Looks up attributes by name. Panics on an unknown name.
    pub fn attrs(&self, names: &[&str]) -> AttrSet {
        AttrSet::from_indices(
            self.n_attributes(),
            names.iter().map(|n| {
                self.attribute_names
                    .iter()
                    .position(|a| a == n)
                    .unwrap_or_else(|| panic!("unknown attribute {n:?}"))
            }),
        )
    }

    /// Looks up objects by name. Panics on an unknown name.
    pub fn objs(&self, names: &[&str]) -> ObjSet {
        ObjSet::from_indices(
            self.n_objects(),
            names.iter().map(|n| {
                self.object_names
                    .iter()
                    .position(|a| a == n)
                    .unwrap_or_else(|| panic!("unknown object {n:?}"))
            }),
        )
    }
}

/// Result of [`FormalContext::clarify_rows`].
#[derive(Clone, Debug)]
pub struct Clarified {
    pub context: FormalContext,
    /// How many original rows each kept row stands for.
    pub multiplicities: Vec<usize>,
    /// Names of the original objects behind each kept row, first one kept.
    pub merged_names: Vec<Vec<String>>,
}
