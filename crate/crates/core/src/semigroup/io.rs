//! Text and JSON readers for Cayley tables.
//!
//! Text format: the first line holds the order `n`, followed by `n` lines of
//! `n` whitespace-separated entries. Blank lines after the table are ignored.

use std::path::Path;

use super::{CayleyTable, TableDocument};
use crate::error::{Error, Result};

pub fn parse_text(input: &str) -> Result<CayleyTable> {
    let mut lines = input.lines().enumerate();
    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_error(1, 1, "empty input"))?;
    let header_col = column_of(header, header.trim());
    let order: usize = header.trim().parse().map_err(|_| {
        parse_error(
            header_line + 1,
            header_col,
            format!("expected the table order, found `{}`", header.trim()),
        )
    })?;
    if order == 0 || order > super::MAX_ORDER {
        return Err(parse_error(
            header_line + 1,
            header_col,
            format!("order must lie in 1..={}", super::MAX_ORDER),
        ));
    }

    let mut cells = Vec::with_capacity(order * order);
    let mut last_line = header_line;
    for row in 0..order {
        let Some((idx, line)) = lines.next() else {
            return Err(parse_error(
                last_line + 2,
                1,
                format!("missing row {} of {order}", row + 1),
            ));
        };
        last_line = idx;
        let mut count = 0;
        for (col, token, offset) in tokens(line) {
            if col >= order {
                return Err(parse_error(
                    idx + 1,
                    offset,
                    format!("row has more than {order} entries"),
                ));
            }
            let value: usize = token.parse().map_err(|_| {
                parse_error(idx + 1, offset, format!("`{token}` is not a non-negative integer"))
            })?;
            if value >= order {
                return Err(parse_error(
                    idx + 1,
                    offset,
                    format!("entry {value} is outside 0..{order}"),
                ));
            }
            cells.push(value);
            count += 1;
        }
        if count < order {
            return Err(parse_error(
                idx + 1,
                line.chars().count() + 1,
                format!("expected {order} entries, found {count}"),
            ));
        }
    }
    if let Some((idx, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(parse_error(
            idx + 1,
            column_of(line, line.trim()),
            "unexpected content after the last row",
        ));
    }
    CayleyTable::from_cells(order, cells)
}

pub fn parse_json(input: &str) -> Result<CayleyTable> {
    let doc: TableDocument = serde_json::from_str(input)?;
    table_from_document(doc)
}

pub(crate) fn table_from_document(doc: TableDocument) -> Result<CayleyTable> {
    if doc.table.len() != doc.order {
        return Err(Error::Table {
            row: doc.table.len().min(doc.order) + 1,
            column: 1,
            message: format!(
                "declared order {} but the table has {} rows",
                doc.order,
                doc.table.len()
            ),
        });
    }
    let table = CayleyTable::from_rows(doc.table)?;
    Ok(match doc.name {
        Some(name) => table.with_name(name),
        None => table,
    })
}

/// Reads a table from disk. Files ending in `.json`, or whose first
/// non-blank character is `{`, are read as JSON.
pub fn read_table(path: impl AsRef<Path>) -> Result<CayleyTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let is_json = path.extension().is_some_and(|e| e == "json")
        || text.trim_start().starts_with('{');
    let table = if is_json {
        parse_json(&text)?
    } else {
        parse_text(&text)?
    };
    Ok(match table.name() {
        Some(_) => table,
        None => {
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
            match stem {
                Some(stem) => table.with_name(stem),
                None => table,
            }
        }
    })
}

impl CayleyTable {
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens as `(index, token, 1-based char column)`.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str, usize)> {
    let mut col = 0;
    let mut rest = line;
    let mut consumed = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        consumed += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let token = &trimmed[..end];
        let column = line[..consumed].chars().count() + 1;
        consumed += end;
        rest = &trimmed[end..];
        col += 1;
        Some((col - 1, token, column))
    })
}

fn column_of(line: &str, needle: &str) -> usize {
    line.find(needle)
        .map(|b| line[..b].chars().count() + 1)
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_text() {
        let t = parse_text("3\n0 1 2\n0 1 2\n0 1 2\n\n").unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.product(2, 1), 1);
        assert_eq!(parse_text(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn ragged_row_reports_position() {
        let err = parse_text("2\n0 1\n0\n").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (3, 2)),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_text("2\n0 1 1\n0 0\n").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (2, 5)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn out_of_range_reports_position() {
        let err = parse_text("2\n0  7\n0 0\n").unwrap_err();
        match err {
            Error::Parse { line, column, message } => {
                assert_eq!((line, column), (2, 4));
                assert!(message.contains("outside"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_rows() {
        assert!(matches!(
            parse_text("3\n0 1 2\n").unwrap_err(),
            Error::Parse { line: 3, .. }
        ));
    }

    #[test]
    fn json_round_trip_and_diagnostics() {
        let t = parse_json(r#"{"name": "rz2", "order": 2, "table": [[0, 1], [0, 1]]}"#).unwrap();
        assert_eq!(t.name(), Some("rz2"));
        let back: CayleyTable = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);

        let err = parse_json(r#"{"order": 2, "table": [[0, 1], [0]]}"#).unwrap_err();
        assert!(matches!(err, Error::Table { row: 2, column: 2, .. }));
        let err = parse_json(r#"{"order": 2, "table": [[0, 1], [0, 5]]}"#).unwrap_err();
        assert!(matches!(err, Error::Table { row: 2, column: 2, .. }));
    }
}
