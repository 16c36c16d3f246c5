//! Deterministic CSV and JSON encodings.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// Fixed 17-significant-digit scientific notation, which round-trips every
/// finite `f64` and never depends on the platform.
pub fn format_float(value: f64) -> String {
    format!("{value:.16e}")
}

/// Shortest round-trip form used inside column names, e.g. `0.25`, `-1`.
pub fn format_gamma(gamma: f64) -> String {
    format!("{gamma}")
}

/// A rectangular table of named columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: Vec<String>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Comma-delimited, `\n` line endings, mandatory header.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| format_float(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`Table::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidConfig("empty csv".into()))?;
        let columns: Vec<String> = header.split(',').map(str::to_owned).collect();
        let mut rows = Vec::new();
        for line in lines {
            let row = line
                .split(',')
                .map(|cell| {
                    cell.parse::<f64>()
                        .map_err(|e| Error::InvalidConfig(format!("bad csv cell {cell:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != columns.len() {
                return Err(Error::InvalidConfig("ragged csv row".into()));
            }
            rows.push(row);
        }
        Ok(Self { columns, rows })
    }
}

/// Top-level JSON export: `{params, columns, data, diagnostics}`.
///
/// Field order is fixed by the struct and every map inside `params` and
/// `diagnostics` is key-sorted, so re-serializing a parsed document
/// reproduces it byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub params: Value,
    pub columns: Vec<String>,
    pub data: Vec<Vec<f64>>,
    pub diagnostics: Value,
}

impl Document {
    pub fn new(params: Value, table: Table, diagnostics: Value) -> Self {
        Self {
            params,
            columns: table.columns,
            data: table.rows,
            diagnostics,
        }
    }

    pub fn table(&self) -> Table {
        Table {
            columns: self.columns.clone(),
            rows: self.data.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidConfig(format!("bad json: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn float_format_is_fixed_width_and_round_trips() {
        assert_eq!(format_float(-0.72), "-7.1999999999999997e-1");
        assert_eq!(format_float(1.0), "1.0000000000000000e0");
        for &v in &[0.1, -2.0 / 3.0, 1e-300, 6.02e23, f64::MIN_POSITIVE] {
            assert_eq!(format_float(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn gamma_labels() {
        assert_eq!(format_gamma(0.25), "0.25");
        assert_eq!(format_gamma(-1.0), "-1");
        assert_eq!(format_gamma(1e8), "100000000");
    }

    #[test]
    fn csv_round_trip() {
        let mut t = Table::new(vec!["r".into(), "V_coulomb".into()]);
        t.push(vec![0.5, -4.0]);
        t.push(vec![1.0, -2.0]);
        let text = t.to_csv();
        assert!(text.starts_with("r,V_coulomb\n"));
        assert_eq!(Table::from_csv(&text).unwrap(), t);
    }

    #[test]
    fn json_has_fixed_top_level_order() {
        let doc = Document::new(
            json!({"z": 1, "a": 2}),
            Table::new(vec!["r".into()]),
            json!({}),
        );
        let text = doc.to_json();
        let p = text.find("\"params\"").unwrap();
        let c = text.find("\"columns\"").unwrap();
        let d = text.find("\"data\"").unwrap();
        let g = text.find("\"diagnostics\"").unwrap();
        assert!(p < c && c < d && d < g);
        assert!(text.find("\"a\"").unwrap() < text.find("\"z\"").unwrap());
    }
}
