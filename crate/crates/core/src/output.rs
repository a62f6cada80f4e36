//! Tabular output documents rendered as TSV (rounded for display) or as a
//! JSON document carrying full-precision values.

use serde::Serialize;
use serde_json::{Map, Value as Json};

/// Rounds to `places` decimals, ties to even.
pub fn round_half_even(x: f64, places: u32) -> f64 {
    let scale = 10f64.powi(places as i32);
    (x * scale).round_ties_even() / scale
}

/// Fixed-point text at `places` decimals after half-even rounding.
pub fn format_fixed(x: f64, places: u32) -> String {
    let text = format!("{:.*}", places as usize, round_half_even(x, places));
    // avoid "-0.00"
    if text.starts_with('-') && text[1..].chars().all(|c| c == '0' || c == '.') {
        text[1..].to_string()
    } else {
        text
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Text(String),
    Int(i64),
    Number(f64),
    /// undefined statistic
    Missing,
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Number(x)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Number)
    }
}

impl Cell {
    fn render(&self, places: u32) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Number(x) => format_fixed(*x, places),
            Cell::Missing => "NA".to_string(),
        }
    }

    fn to_json(&self) -> Json {
        match self {
            Cell::Text(s) => Json::String(s.clone()),
            Cell::Int(n) => Json::from(*n),
            Cell::Number(x) => serde_json::Number::from_f64(*x).map_or(Json::Null, Json::Number),
            Cell::Missing => Json::Null,
        }
    }
}

/// Named columns, rows of cells, and free-form trailing lines (order
/// summaries, agreement reports).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputDocument {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<(String, String)>,
}

impl OutputDocument {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn push_note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.notes.push((key.into(), value.into()));
    }

    /// Column lookup by name for a given row.
    pub fn cell(&self, row: usize, column: &str) -> Option<&Cell> {
        let col = self.columns.iter().position(|c| c == column)?;
        self.rows.get(row)?.get(col)
    }

    pub fn number(&self, row: usize, column: &str) -> Option<f64> {
        match self.cell(row, column)? {
            Cell::Number(x) => Some(*x),
            Cell::Int(n) => Some(*n as f64),
            _ => None,
        }
    }

    /// Header line, one line per row, then `# key: value` notes.
    pub fn to_tsv(&self, places: u32) -> String {
        let mut out = self.columns.join("\t");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.render(places)).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        for (key, value) in &self.notes {
            out.push_str(&format!("# {key}: {value}\n"));
        }
        out
    }

    pub fn to_json_value(&self) -> Json {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let object: Map<String, Json> = self
                    .columns
                    .iter()
                    .cloned()
                    .zip(row.iter().map(Cell::to_json))
                    .collect();
                Json::Object(object)
            })
            .collect();
        let notes: Map<String, Json> = self
            .notes
            .iter()
            .map(|(k, v)| (k.clone(), Json::String(v.clone())))
            .collect();
        serde_json::json!({
            "title": self.title,
            "columns": self.columns,
            "rows": Json::Array(rows),
            "notes": notes,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("document is valid JSON")
    }
}
