//! Delimited-text ingestion: turning tabular files into object sets.
//!
//! The first record of a table is the header (variable names); every
//! following record is one object. Cells are taken verbatim — exact
//! character equality defines category identity, so `"0"` and `"00"`
//! are different categories and whitespace inside cells is preserved.
//! Cells may be double-quoted to embed the delimiter; a doubled quote
//! inside a quoted cell escapes a quote.

use std::collections::BTreeSet;

use crate::error::{EntropyError, TableError};
use crate::object_set::ObjectSet;

/// A parsed table, not yet validated as an object set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDocument {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Origin label: a file path, or "stdin".
    pub source: String,
}

fn delimiter_byte(delimiter: char) -> Result<u8, TableError> {
    if !delimiter.is_ascii() || delimiter == '"' || delimiter == '\n' || delimiter == '\r' {
        return Err(TableError::InvalidDelimiter(delimiter));
    }
    Ok(delimiter as u8)
}

/// Parses delimited text into a [`TableDocument`]. The first record is
/// the header; rows that do not match the header width are rejected
/// with their 1-based line number.
pub fn parse_table(text: &str, delimiter: char, source: &str) -> Result<TableDocument, TableError> {
    let delim = delimiter_byte(delimiter)?;
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delim)
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());

    let mut header: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            TableError::Malformed {
                line,
                message: e.to_string(),
            }
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let cells: Vec<String> = record.iter().map(str::to_string).collect();
        match &header {
            None => {
                let mut seen = BTreeSet::new();
                for name in &cells {
                    if !seen.insert(name.as_str()) {
                        return Err(TableError::DuplicateColumn(name.clone()));
                    }
                }
                header = Some(cells);
            }
            Some(h) => {
                if cells.len() != h.len() {
                    return Err(TableError::RaggedRow {
                        row: line,
                        got: cells.len(),
                        expected: h.len(),
                    });
                }
                rows.push(cells);
            }
        }
    }

    let header = header.ok_or(TableError::NoHeader)?;
    Ok(TableDocument {
        header,
        rows,
        source: source.to_string(),
    })
}

/// Validates a parsed table as an [`ObjectSet`]: header becomes the
/// variable names, rows become the objects.
pub fn to_object_set(doc: &TableDocument) -> Result<ObjectSet, EntropyError> {
    ObjectSet::new(doc.header.clone(), doc.rows.clone())
}

/// Writes an object set back out as delimited text (header first, one
/// object per row), quoting cells only where needed.
pub fn serialize_object_set(set: &ObjectSet, delimiter: char) -> Result<String, TableError> {
    let delim = delimiter_byte(delimiter)?;
    let mut writer = csv::WriterBuilder::new()
        .delimiter(delim)
        .from_writer(Vec::new());
    writer
        .write_record(set.variable_names())
        .expect("writing to memory cannot fail");
    for row in set.objects() {
        writer
            .write_record(row)
            .expect("writing to memory cannot fail");
    }
    let bytes = writer.into_inner().expect("writer flushes to memory");
    Ok(String::from_utf8(bytes).expect("serialized table is UTF-8"))
}
