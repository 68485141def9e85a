//! Burmeister `.cxt` files.
//!
//! ```text
//! B
//!
//! <|G|>
//! <|M|>
//!
//! <object names, one per line>
//! <attribute names, one per line>
//! <|G| rows over {X, .}>
//! ```

use std::fmt::Write as _;

use super::FormalContext;
use crate::bitset::AttrSet;
use crate::error::{Error, Result};

pub fn parse_burmeister(text: &str) -> Result<FormalContext> {
    let mut lines = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate()
        .map(|(i, l)| (i + 1, l));
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("unexpected end of input, expected {what}")))
    };

    let (n, l) = next("header")?;
    if l != "B" {
        return Err(Error::parse(n, format!("expected 'B', found {l:?}")));
    }
    let (n, l) = next("blank line")?;
    if !l.is_empty() {
        return Err(Error::parse(n, "expected blank line after 'B'"));
    }
    let mut count = |what: &str| -> Result<usize> {
        let (n, l) = next(what)?;
        l.trim()
            .parse()
            .map_err(|_| Error::parse(n, format!("expected {what}, found {l:?}")))
    };
    let n_objects = count("object count")?;
    let n_attributes = count("attribute count")?;
    let (n, l) = next("blank line")?;
    if !l.is_empty() {
        return Err(Error::parse(n, "expected blank line after counts"));
    }

    let mut objects = Vec::with_capacity(n_objects);
    for _ in 0..n_objects {
        objects.push(next("object name")?.1.to_string());
    }
    let mut attributes = Vec::with_capacity(n_attributes);
    for _ in 0..n_attributes {
        attributes.push(next("attribute name")?.1.to_string());
    }

    let mut rows = Vec::with_capacity(n_objects);
    for _ in 0..n_objects {
        let (n, l) = next("incidence row")?;
        if l.chars().count() != n_attributes {
            return Err(Error::parse(
                n,
                format!(
                    "incidence row has {} cells, expected {n_attributes}",
                    l.chars().count()
                ),
            ));
        }
        let mut row = AttrSet::empty(n_attributes);
        for (m, c) in l.chars().enumerate() {
            match c {
                'X' => row.insert(m),
                '.' => {}
                other => {
                    return Err(Error::parse(n, format!("unexpected cell {other:?}")));
                }
            }
        }
        rows.push(row);
    }

    for (n, l) in lines {
        if !l.trim().is_empty() {
            return Err(Error::parse(n, "trailing content after incidence rows"));
        }
    }

    FormalContext::new(objects, attributes, rows)
}

pub fn write_burmeister(ctx: &FormalContext) -> String {
    let mut out = String::new();
    let _ = write!(out, "B\n\n{}\n{}\n\n", ctx.n_objects(), ctx.n_attributes());
    for name in ctx.object_names().iter().chain(ctx.attribute_names()) {
        out.push_str(name);
        out.push('\n');
    }
    for row in ctx.rows() {
        out.extend((0..ctx.n_attributes()).map(|m| if row.contains(m) { 'X' } else { '.' }));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const TOY: &str = "B\n\n4\n5\n\ng1\ng2\ng3\ng4\na\nb\nc\nd\ne\nX..X.\nX.X..\n.XX..\n.XXX.\n";

    #[test]
    fn parses_toy_grid() {
        let ctx = parse_burmeister(TOY).unwrap();
        assert_eq!(ctx, fixtures::geometric_figures());
        assert_eq!(ctx.rows()[3], ctx.attrs(&["b", "c", "d"]));
    }

    #[test]
    fn writes_bit_exact() {
        assert_eq!(write_burmeister(&fixtures::geometric_figures()), TOY);
    }

    #[test]
    fn trailing_newline_optional() {
        let ctx = parse_burmeister(TOY.trim_end()).unwrap();
        assert_eq!(ctx, fixtures::geometric_figures());
    }

    #[test]
    fn zero_objects() {
        let ctx = parse_burmeister("B\n\n0\n3\n\nx\ny\nz\n").unwrap();
        assert_eq!(ctx.n_objects(), 0);
        assert_eq!(ctx.n_attributes(), 3);
        assert!(ctx.rows().is_empty());
    }

    #[test]
    fn rejects_malformed() {
        let cases = [
            ("A\n\n1\n1\n\ng\nm\nX\n", "expected 'B'"),
            ("B\n\nfour\n1\n\n", "object count"),
            ("B\n\n1\n2\n\ng\nm\nn\nX\n", "cells"),
            ("B\n\n1\n1\n\ng\nm\nO\n", "unexpected cell"),
            ("B\n\n2\n1\n\ng\nm\nX", "end of input"),
            ("B\n\n1\n1\n\ng\nm\nX\nX\n", "trailing"),
        ];
        for (text, needle) in cases {
            let err = parse_burmeister(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{err:?} lacks {needle:?}");
        }
        assert!(matches!(
            parse_burmeister("B\n\n2\n1\n\ng\ng\nm\nX\n.\n"),
            Err(Error::DuplicateName { .. })
        ));
    }
}
