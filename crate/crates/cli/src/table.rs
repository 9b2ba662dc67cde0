//! Table assembly and rendering. Tables keep the orientation used
//! throughout: the column axis is n (or i), the row axis h (or k), and
//! every cell is an explicit exact decimal integer.

use fibcube::ExactInt;
use serde::Serialize;

/// A fully computed table, ready to render in any format.
pub struct TableData {
    pub quantity: String,
    pub route: String,
    pub row_axis: char,
    pub col_axis: char,
    pub col_values: Vec<u32>,
    pub rows: Vec<(u32, Vec<ExactInt>)>,
}

impl TableData {
    pub fn render_ascii(&self) -> String {
        let labels: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(idx, (value, _))| {
                if idx == 0 {
                    format!("{}={}", self.row_axis, value)
                } else {
                    value.to_string()
                }
            })
            .collect();
        let headers: Vec<String> = self
            .col_values
            .iter()
            .enumerate()
            .map(|(idx, value)| {
                if idx == 0 {
                    format!("{}={}", self.col_axis, value)
                } else {
                    value.to_string()
                }
            })
            .collect();

        let label_width = labels.iter().map(String::len).max().unwrap_or(0);
        let mut widths: Vec<usize> = headers.iter().map(String::len).collect();
        for (_, cells) in &self.rows {
            for (col, cell) in cells.iter().enumerate() {
                widths[col] = widths[col].max(cell.to_string().len());
            }
        }

        let mut out = String::new();
        out.push_str(&" ".repeat(label_width));
        for (col, header) in headers.iter().enumerate() {
            out.push_str("  ");
            out.push_str(&format!("{header:>width$}", width = widths[col]));
        }
        out.push('\n');
        for (row, (_, cells)) in self.rows.iter().enumerate() {
            out.push_str(&format!("{:<label_width$}", labels[row]));
            for (col, cell) in cells.iter().enumerate() {
                out.push_str("  ");
                out.push_str(&format!("{cell:>width$}", width = widths[col]));
            }
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push(self.row_axis);
        for value in &self.col_values {
            out.push_str(&format!(",{value}"));
        }
        out.push('\n');
        for (label, cells) in &self.rows {
            out.push_str(&label.to_string());
            for cell in cells {
                out.push_str(&format!(",{cell}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct JsonRow {
            label: String,
            values: Vec<String>,
        }
        #[derive(Serialize)]
        struct JsonTable<'a> {
            quantity: &'a str,
            route: &'a str,
            rows: Vec<JsonRow>,
        }
        let table = JsonTable {
            quantity: &self.quantity,
            route: &self.route,
            rows: self
                .rows
                .iter()
                .map(|(label, cells)| JsonRow {
                    label: format!("{}={}", self.row_axis, label),
                    values: cells.iter().map(ExactInt::to_string).collect(),
                })
                .collect(),
        };
        let mut text =
            serde_json::to_string_pretty(&table).expect("tables serialize infallibly");
        text.push('\n');
        text
    }
}
