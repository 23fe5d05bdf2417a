//! Tabular output: CSV (comma delimiter, LF endings, header row) and a JSON
//! mirror carrying a metadata object.
//!
//! Numbers are rendered in scientific notation with 9 significant digits —
//! enough to verify the cross-method agreement criteria from the files
//! alone — and identical inputs always produce identical bytes.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableMetadata {
    pub units: &'static str,
    pub method: String,
    pub version: &'static str,
}

/// Column-oriented numeric table with stable header names.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputTable {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub metadata: TableMetadata,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    metadata: &'a TableMetadata,
    columns: &'a [&'static str],
    rows: &'a [Vec<f64>],
}

impl OutputTable {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format_number(*v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = JsonDocument {
            metadata: &self.metadata,
            columns: &self.columns,
            rows: &self.rows,
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("table serializes");
        text.push('\n');
        text
    }
}

/// Scientific notation, 9 significant digits.
fn format_number(v: f64) -> String {
    format!("{v:.8e}")
}

/// Write the rendered table to `path`, or to standard output when no path
/// is given.
pub fn emit(table: &OutputTable, format: OutputFormat, path: Option<&Path>) -> std::io::Result<()> {
    let text = table.render(format);
    match path {
        Some(path) => std::fs::write(path, text),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle.write_all(text.as_bytes())
        }
    }
}
