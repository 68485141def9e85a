//! Dense 0/1 CSV tables: a header row of attribute names, object ids in the
//! leading column(s), one binary cell per attribute.

use super::FormalContext;
use crate::bitset::AttrSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct CsvOptions {
    /// Keep only the first `max_attrs` attribute columns.
    pub max_attrs: Option<usize>,
    /// Leading non-binary columns. The first one names the object, the
    /// rest are dropped.
    pub id_columns: usize,
}

impl Default for CsvOptions {
    fn default() -> Self {
        CsvOptions {
            max_attrs: None,
            id_columns: 1,
        }
    }
}

pub fn parse_dense_csv(text: &str, max_attrs: Option<usize>) -> Result<FormalContext> {
    parse_dense_csv_with(
        text,
        &CsvOptions {
            max_attrs,
            ..CsvOptions::default()
        },
    )
}

pub fn parse_dense_csv_with(text: &str, opts: &CsvOptions) -> Result<FormalContext> {
    if opts.id_columns == 0 {
        return Err(Error::Invalid("at least one id column is required".into()));
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(text.as_bytes());

    let header = reader
        .headers()
        .map_err(|e| Error::parse(1, e.to_string()))?
        .clone();
    if header.len() < opts.id_columns {
        return Err(Error::parse(1, "header has fewer columns than id columns"));
    }
    let width = header.len() - opts.id_columns;
    let kept = opts.max_attrs.map_or(width, |k| k.min(width));
    let attributes: Vec<String> = header
        .iter()
        .skip(opts.id_columns)
        .take(kept)
        .map(|s| s.trim().to_string())
        .collect();

    let mut objects = Vec::new();
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let line = i + 2;
        let record = record.map_err(|e| Error::parse(line, e.to_string()))?;
        if record.len() == 1 && record[0].trim().is_empty() {
            continue;
        }
        if record.len() != header.len() {
            return Err(Error::parse(
                line,
                format!(
                    "row has {} cells, header has {}",
                    record.len(),
                    header.len()
                ),
            ));
        }
        let mut row = AttrSet::empty(kept);
        for (m, cell) in record.iter().skip(opts.id_columns).enumerate() {
            let bit = match cell.trim() {
                "1" => true,
                "0" => false,
                other => {
                    return Err(Error::parse(line, format!("non-binary cell {other:?}")));
                }
            };
            if bit && m < kept {
                row.insert(m);
            }
        }
        objects.push(record[0].trim().to_string());
        rows.push(row);
    }

    FormalContext::new(objects, attributes, rows)
}

pub fn write_dense_csv(ctx: &FormalContext) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("id").chain(ctx.attribute_names().iter().map(String::as_str));
    w.write_record(header).expect("writing to memory");
    for (name, row) in ctx.object_names().iter().zip(ctx.rows()) {
        let cells = (0..ctx.n_attributes()).map(|m| if row.contains(m) { "1" } else { "0" });
        w.write_record(std::iter::once(name.as_str()).chain(cells))
            .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
}
