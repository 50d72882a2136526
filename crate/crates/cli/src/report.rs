//! Rendering of per-journal results as aligned text, CSV or JSON.

use std::fmt::Write as _;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

/// Rounds to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Up to 12 significant digits, plain notation for ordinary magnitudes.
pub fn format_number(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 {
        return "0".to_owned();
    }
    let mag = r.abs();
    if (1e-5..1e15).contains(&mag) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    /// Fixed decimals for table output; `None` prints 12 significant digits.
    pub decimals: Option<usize>,
}

impl Column {
    pub fn new(name: impl Into<String>) -> Self {
        Column {
            name: name.into(),
            decimals: None,
        }
    }

    pub fn fixed(name: impl Into<String>, decimals: usize) -> Self {
        Column {
            name: name.into(),
            decimals: Some(decimals),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub journal: String,
    /// `None` marks an undefined value.
    pub values: Vec<Option<f64>>,
}

/// One result table: a row per journal plus metadata and summary figures.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub indicator: String,
    pub meta: Map<String, Value>,
    pub columns: Vec<Column>,
    pub rows: Vec<Row>,
    pub summary: Vec<(String, Option<f64>)>,
}

impl Report {
    pub fn new(indicator: impl Into<String>, columns: Vec<Column>) -> Self {
        let indicator = indicator.into();
        let mut meta = Map::new();
        meta.insert("indicator".into(), Value::String(indicator.clone()));
        Report {
            indicator,
            meta,
            columns,
            rows: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn meta(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.meta.insert(key.to_owned(), value.into());
        self
    }

    pub fn push_row(&mut self, journal: &str, values: Vec<Option<f64>>) {
        debug_assert_eq!(values.len(), self.columns.len());
        self.rows.push(Row {
            journal: journal.to_owned(),
            values,
        });
    }

    pub fn push_summary(&mut self, name: &str, value: Option<f64>) {
        self.summary.push((name.to_owned(), value));
    }
}

fn number_value(x: Option<f64>) -> Value {
    x.map(round_sig)
        .and_then(serde_json::Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn to_json(report: &Report) -> Value {
    let mut obj = Map::new();
    for row in &report.rows {
        let cells: Map<String, Value> = report
            .columns
            .iter()
            .zip(&row.values)
            .map(|(c, v)| (c.name.clone(), number_value(*v)))
            .collect();
        obj.insert(row.journal.clone(), Value::Object(cells));
    }
    let mut meta = report.meta.clone();
    meta.insert("version".into(), Value::String(env!("CARGO_PKG_VERSION").into()));
    if !report.summary.is_empty() {
        let summary: Map<String, Value> = report
            .summary
            .iter()
            .map(|(k, v)| (k.clone(), number_value(*v)))
            .collect();
        meta.insert("summary".into(), Value::Object(summary));
    }
    obj.insert("meta".into(), Value::Object(meta));
    Value::Object(obj)
}

fn render_csv(report: &Report) -> String {
    let mut out = String::from("journal");
    for c in &report.columns {
        out.push(',');
        out.push_str(&csv_field(&c.name));
    }
    out.push('\n');
    for row in &report.rows {
        out.push_str(&csv_field(&row.journal));
        for v in &row.values {
            out.push(',');
            if let Some(v) = v {
                out.push_str(&format_number(*v));
            }
        }
        out.push('\n');
    }
    out
}

fn table_cell(v: Option<f64>, column: &Column) -> String {
    match (v, column.decimals) {
        (None, _) => "-".to_owned(),
        (Some(v), Some(d)) => format!("{v:.d$}"),
        (Some(v), None) => format_number(v),
    }
}

fn meta_line(report: &Report) -> String {
    let mut parts = Vec::new();
    for (k, v) in &report.meta {
        if k == "indicator" {
            continue;
        }
        match v {
            Value::String(s) => parts.push(format!("{k}={s}")),
            other => parts.push(format!("{k}={other}")),
        }
    }
    if parts.is_empty() {
        format!("# {}", report.indicator)
    } else {
        format!("# {} ({})", report.indicator, parts.join(", "))
    }
}

fn render_table(report: &Report) -> String {
    let header: Vec<String> = std::iter::once("journal".to_owned())
        .chain(report.columns.iter().map(|c| c.name.clone()))
        .collect();
    let body: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            std::iter::once(r.journal.clone())
                .chain(r.values.iter().zip(&report.columns).map(|(v, c)| table_cell(*v, c)))
                .collect()
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }

    let mut out = meta_line(report);
    out.push('\n');
    let line = |cells: &[String], out: &mut String| {
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i == 0 {
                let _ = write!(out, "{cell:<w$}");
            } else {
                let _ = write!(out, "  {cell:>w$}");
            }
        }
        let trimmed = out.trim_end_matches(' ').len();
        out.truncate(trimmed);
        out.push('\n');
    };
    line(&header, &mut out);
    for row in &body {
        line(row, &mut out);
    }
    for (name, value) in &report.summary {
        let shown = value.map_or_else(|| "undefined".to_owned(), format_number);
        let _ = writeln!(out, "{name}: {shown}");
    }
    out
}

pub fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Table => render_table(report),
        Format::Csv => render_csv(report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&to_json(report)).expect("json values serialize");
            s.push('\n');
            s
        }
    }
}

/// Several reports under section headings (table, csv) or as one JSON
/// object keyed by section name.
pub fn render_sections(sections: &[(&str, Report)], format: Format) -> String {
    match format {
        Format::Json => {
            let obj: Map<String, Value> = sections
                .iter()
                .map(|(name, r)| ((*name).to_owned(), to_json(r)))
                .collect();
            let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json values serialize");
            s.push('\n');
            s
        }
        _ => sections
            .iter()
            .map(|(name, r)| format!("## {name}\n{}", render_report(r, format)))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo", vec![Column::new("with"), Column::new("pct_change")])
            .meta("iterations", 7)
            .meta("self_citations", true);
        r.push_row("A, B", vec![Some(0.136_312_345_678_912_3), Some(-0.14)]);
        r.push_row("C", vec![Some(2.0), None]);
        r.push_summary("max_abs_pct_change", Some(0.14));
        r
    }

    #[test]
    fn formats_twelve_significant_digits() {
        assert_eq!(format_number(0.136_312_345_678_912_3), "0.136312345679");
        assert_eq!(format_number(27596.0), "27596");
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1.234_567_890_123_456e20), "1.23456789012e20");
        assert_eq!(format_number(1.5e-9), "1.5e-9");
    }

    #[test]
    fn csv_layout() {
        let csv = render_report(&sample(), Format::Csv);
        assert_eq!(csv, "journal,with,pct_change\n\"A, B\",0.136312345679,-0.14\nC,2,\n");
    }

    #[test]
    fn json_layout_and_round_trip() {
        let text = render_report(&sample(), Format::Json);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["A, B"]["with"].as_f64(), Some(0.136312345679));
        assert_eq!(v["C"]["pct_change"], Value::Null);
        assert_eq!(v["meta"]["indicator"], "demo");
        assert_eq!(v["meta"]["iterations"], 7);
        assert_eq!(v["meta"]["self_citations"], true);
        assert_eq!(v["meta"]["version"], env!("CARGO_PKG_VERSION"));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["A, B", "C", "meta"]);
    }

    #[test]
    fn table_is_aligned() {
        let t = render_report(&sample(), Format::Table);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "# demo (iterations=7, self_citations=true)");
        assert_eq!(lines[1].len(), lines[2].len());
        assert!(lines[3].ends_with('-'));
        assert_eq!(lines[4], "max_abs_pct_change: 0.14");
    }

    #[test]
    fn default_format_is_table() {
        assert_eq!(Format::default(), Format::Table);
    }
}
