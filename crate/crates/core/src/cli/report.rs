use std::fmt::Write as _;
use std::io;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "fock-basis/1";
pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Rows of strings with a header, shared by the text and CSV renderers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, header: &[&str]) -> Self {
        Self {
            title: title.to_string(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<I: IntoIterator<Item = String>>(&mut self, row: I) {
        self.rows.push(row.into_iter().collect());
    }

    fn render_text(&self, out: &mut String) {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r.get(c).map_or(0, |s| s.chars().count()))
                    .chain([self.header[c].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String], out: &mut String| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}", w = *w))
                .collect();
            let _ = writeln!(out, "  {}", padded.join("  ").trim_end());
        };
        let _ = writeln!(out, "{}", self.title);
        line(&self.header, out);
        for r in &self.rows {
            line(r, out);
        }
    }

    fn write_csv<W: io::Write>(&self, w: &mut csv::Writer<W>) -> csv::Result<()> {
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        Ok(())
    }
}

/// Outcome of one subcommand, renderable as text, JSON or CSV.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: Value,
    pub passed: bool,
    pub results: Value,
    #[serde(skip)]
    pub summary: Vec<String>,
    #[serde(skip)]
    pub tables: Vec<Table>,
    /// Replaces `tables` in CSV output when set.
    #[serde(skip)]
    pub csv_table: Option<Table>,
}

impl Report {
    pub fn new<C: Serialize, R: Serialize>(command: &'static str, config: &C, passed: bool, results: &R) -> Self {
        Self {
            schema: SCHEMA,
            tool: TOOL,
            version: VERSION,
            command,
            config: serde_json::to_value(config).expect("config serializes"),
            passed,
            results: serde_json::to_value(results).expect("results serialize"),
            summary: Vec::new(),
            tables: Vec::new(),
            csv_table: None,
        }
    }

    pub fn with_summary(mut self, line: String) -> Self {
        self.summary.push(line);
        self
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.tables.push(table);
        self
    }

    pub fn with_csv_table(mut self, table: Table) -> Self {
        self.csv_table = Some(table);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}: {}", self.tool, self.command, if self.passed { "PASS" } else { "FAIL" });
        for line in &self.summary {
            let _ = writeln!(out, "  {line}");
        }
        for t in &self.tables {
            out.push('\n');
            t.render_text(&mut out);
        }
        out
    }

    /// Every table in turn, separated by a blank line.
    pub fn to_csv(&self) -> String {
        let tables = match &self.csv_table {
            Some(t) => std::slice::from_ref(t),
            None => &self.tables[..],
        };
        let mut parts = Vec::new();
        for t in tables {
            let mut w = csv::Writer::from_writer(Vec::new());
            t.write_csv(&mut w).expect("writing to memory");
            let bytes = w.into_inner().expect("flushing to memory");
            parts.push(String::from_utf8(bytes).expect("csv is utf-8"));
        }
        parts.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_all_formats() {
        let mut t = Table::new("cells", &["a", "bb"]);
        t.push(["1".to_string(), "22".to_string()]);
        let r = Report::new("demo", &serde_json::json!({"x": 1}), true, &vec![1, 2]).with_table(t);
        assert!(r.to_json().contains("\"schema\": \"fock-basis/1\""));
        assert_eq!(r.to_csv(), "a,bb\n1,22\n");
        assert!(r.to_text().starts_with("fockspace demo: PASS\n"));
    }
}
