//! Square cited×citing count matrices.
//!
//! Cell `(i, j)` of a [`CitationMatrix`] holds the citations journal `i`
//! received from journal `j`. Row sums are therefore citations received
//! ("cited" margin) and column sums are references given ("citing" margin).

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Default cap on the number of journals accepted by the parser.
pub const DEFAULT_MAX_JOURNALS: usize = 1024;

/// Ordered, unique journal labels shared by the rows and columns of a matrix.
/// Surrounding whitespace is trimmed on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JournalSet {
    labels: Vec<String>,
}

impl JournalSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels
            .into_iter()
            .map(|l| {
                let l: String = l.into();
                l.trim().to_owned()
            })
            .collect();
        let mut seen = HashSet::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel(i));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(JournalSet { labels })
    }

    /// Synthetic labels `J1..Jn`.
    pub fn generated(n: usize) -> Self {
        JournalSet {
            labels: (1..=n).map(|i| format!("J{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Reorders labels so that entry `i` of the result is entry `order[i]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        JournalSet {
            labels: order.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }
}

/// Dense row-major square matrix of binary64 values.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.n.max(1))
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(<[f64]>::to_vec).collect()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.n];
        for row in self.rows() {
            for (s, v) in sums.iter_mut().zip(row) {
                *s += v;
            }
        }
        sums
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn scaled(&self, factor: f64) -> Self {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    /// Matrix-vector product; each output entry is summed in column order.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        debug_assert_eq!(v.len(), self.n);
        self.rows().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Matrix product `self · rhs`, summing each cell in index order.
    pub fn mul(&self, rhs: &SquareMatrix) -> SquareMatrix {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let lhs_row = self.row(i);
            for j in 0..n {
                let mut acc = 0.0;
                for (k, a) in lhs_row.iter().enumerate() {
                    acc += a * rhs.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn sum(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn values(&self) -> &[f64] {
        &self.data
    }

    fn first_non_finite(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|v| !v.is_finite())
            .map(|p| (p / self.n, p % self.n))
    }
}

/// Which axis the rows of a [`CitationMatrix`] represent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Rows are cited journals, columns are citing journals.
    CitedRows,
    /// Rows are citing journals (the transposed view).
    CitingRows,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::CitedRows => Orientation::CitingRows,
            Orientation::CitingRows => Orientation::CitedRows,
        }
    }
}

/// A validated square matrix of non-negative finite citation counts.
#[derive(Debug, Clone, PartialEq)]
pub struct CitationMatrix {
    journals: JournalSet,
    counts: SquareMatrix,
    orientation: Orientation,
}

impl CitationMatrix {
    /// Builds a cited×citing matrix. Requires `n >= 2` and every cell finite and `>= 0`.
    pub fn new(journals: JournalSet, mut counts: SquareMatrix) -> Result<Self> {
        if journals.len() != counts.dim() {
            return Err(Error::LengthMismatch {
                expected: counts.dim(),
                found: journals.len(),
            });
        }
        if counts.dim() < 2 {
            return Err(Error::TooSmall(counts.dim()));
        }
        let n = counts.dim();
        for (p, v) in counts.data.iter_mut().enumerate() {
            if !v.is_finite() || *v < 0.0 {
                return Err(Error::InvalidCell {
                    line: (p / n + 1) as u64,
                    field: p % n + 1,
                    value: v.to_string(),
                });
            }
            // normalise -0.0 so serialisation never emits a sign
            if *v == 0.0 {
                *v = 0.0;
            }
        }
        Ok(CitationMatrix {
            journals,
            counts,
            orientation: Orientation::CitedRows,
        })
    }

    /// Convenience constructor with labels `J1..Jn`.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let counts = SquareMatrix::from_rows(rows)?;
        Self::new(JournalSet::generated(counts.dim()), counts)
    }

    pub fn with_labels<I, S>(labels: I, rows: &[Vec<f64>]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(JournalSet::new(labels)?, SquareMatrix::from_rows(rows)?)
    }

    pub fn journals(&self) -> &JournalSet {
        &self.journals
    }

    pub fn counts(&self) -> &SquareMatrix {
        &self.counts
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn dim(&self) -> usize {
        self.counts.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.counts.get(row, col)
    }

    /// Multiplies every count by `factor` (> 0).
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let mut m = Self::new(self.journals.clone(), self.counts.scaled(factor))?;
        m.orientation = self.orientation;
        Ok(m)
    }

    /// Relabels and reorders rows and columns together: journal `i` of the
    /// result is journal `order[i]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let n = self.dim();
        assert_eq!(order.len(), n, "permutation length must match matrix size");
        let mut counts = SquareMatrix::zeros(n);
        for (i, &oi) in order.iter().enumerate() {
            for (j, &oj) in order.iter().enumerate() {
                counts.set(i, j, self.counts.get(oi, oj));
            }
        }
        CitationMatrix {
            journals: self.journals.permuted(order),
            counts,
            orientation: self.orientation,
        }
    }
}

/// Row, column and grand totals of a citation matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct MarginTotals {
    /// Citations received per journal (row sums).
    pub cited_totals: Vec<f64>,
    /// References given per journal (column sums).
    pub citing_totals: Vec<f64>,
    pub grand_total: f64,
}

pub fn margins(m: &CitationMatrix) -> MarginTotals {
    MarginTotals {
        cited_totals: m.counts.row_sums(),
        citing_totals: m.counts.col_sums(),
        grand_total: m.counts.sum(),
    }
}

pub fn transpose(m: &CitationMatrix) -> CitationMatrix {
    CitationMatrix {
        journals: m.journals.clone(),
        counts: m.counts.transpose(),
        orientation: m.orientation.flipped(),
    }
}

/// Copy of `m` with every diagonal (within-journal) count set to zero.
pub fn strip_self_citations(m: &CitationMatrix) -> CitationMatrix {
    let mut stripped = m.clone();
    for i in 0..m.dim() {
        stripped.counts.set(i, i, 0.0);
    }
    stripped
}

/// `Z^k` by repeated multiplication in binary64.
pub fn matrix_power(m: &CitationMatrix, k: u32) -> Result<SquareMatrix> {
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    let mut acc = m.counts.clone();
    for _ in 1..k {
        acc = acc.mul(&m.counts);
        if let Some((row, col)) = acc.first_non_finite() {
            return Err(Error::NonFiniteCell {
                row: m.journals.label(row).to_owned(),
                column: m.journals.label(col).to_owned(),
            });
        }
    }
    Ok(acc)
}

/// Whether the first row and column of a CSV grid carry journal labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelsMode {
    /// Bare `n × n` grid; journals are labelled `J1..Jn`.
    #[default]
    Headerless,
    /// First row holds column labels (after an ignored corner cell) and
    /// the first column holds row labels; both axes must agree.
    Labeled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub labels: LabelsMode,
    pub max_journals: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            labels: LabelsMode::Headerless,
            max_journals: DEFAULT_MAX_JOURNALS,
        }
    }
}

impl ParseOptions {
    pub fn new(labels: LabelsMode) -> Self {
        ParseOptions {
            labels,
            ..Self::default()
        }
    }
}

fn parse_cell(raw: &str, line: u64, field: usize) -> Result<f64> {
    match raw.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Ok(v),
        _ => Err(Error::InvalidCell {
            line,
            field,
            value: raw.to_owned(),
        }),
    }
}

/// Parses a comma-separated citation grid. CRLF and LF line endings are
/// both accepted; blank lines are ignored.
pub fn parse_matrix_csv(text: &[u8], options: ParseOptions) -> Result<CitationMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text);

    let skip = usize::from(options.labels == LabelsMode::Labeled);
    let mut column_labels: Option<Vec<String>> = None;
    let mut row_labels = Vec::new();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width: Option<usize> = None;

    for record in reader.records() {
        let record = record.map_err(|e| Error::Csv(e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        let fields = record.len();
        let expected = *width.get_or_insert(fields);
        if fields != expected {
            return Err(Error::RaggedRow {
                line,
                expected,
                found: fields,
            });
        }
        let n = fields.saturating_sub(skip);
        if n > options.max_journals {
            return Err(Error::TooLarge {
                n,
                limit: options.max_journals,
            });
        }

        if skip == 1 && column_labels.is_none() {
            column_labels = Some(record.iter().skip(1).map(str::to_owned).collect());
            continue;
        }
        if skip == 1 {
            row_labels.push(record[0].to_owned());
        }
        let row = record
            .iter()
            .enumerate()
            .skip(skip)
            .map(|(f, raw)| parse_cell(raw, line, f + 1))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
        if rows.len() > options.max_journals {
            return Err(Error::TooLarge {
                n: rows.len(),
                limit: options.max_journals,
            });
        }
    }

    let cols = width.map_or(0, |w| w.saturating_sub(skip));
    if rows.len() != cols {
        if rows.len() < 2 && cols < 2 {
            return Err(Error::TooSmall(rows.len().max(cols)));
        }
        return Err(Error::NotSquare { rows: rows.len(), cols });
    }
    if cols < 2 {
        return Err(Error::TooSmall(cols));
    }

    let journals = match column_labels {
        None => JournalSet::generated(cols),
        Some(columns) => {
            for (index, (row, column)) in row_labels.iter().zip(&columns).enumerate() {
                if row != column {
                    return Err(Error::LabelMismatch {
                        index,
                        row: row.clone(),
                        column: column.clone(),
                    });
                }
            }
            JournalSet::new(columns)?
        }
    };
    CitationMatrix::new(journals, SquareMatrix::from_rows(&rows)?)
}

fn quote_label(label: &str) -> String {
    let needs_quotes = label.contains([',', '"', '\n', '\r']);
    if needs_quotes {
        format!("\"{}\"", label.replace('"', "\"\""))
    } else {
        label.to_owned()
    }
}

/// Writes `m` as a comma-separated grid with LF line endings and no
/// trailing newline. Values use the shortest representation that parses
/// back to the same binary64.
pub fn serialize_matrix_csv(m: &CitationMatrix, mode: LabelsMode) -> String {
    let mut out = String::new();
    let labeled = mode == LabelsMode::Labeled;
    if labeled {
        for label in m.journals.iter() {
            out.push(',');
            out.push_str(&quote_label(label));
        }
        out.push('\n');
    }
    for (i, row) in m.counts.rows().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        if labeled {
            out.push_str(&quote_label(m.journals.label(i)));
            out.push(',');
        }
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "{v}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn headerless(text: &str) -> Result<CitationMatrix> {
        parse_matrix_csv(text.as_bytes(), ParseOptions::default())
    }

    #[test]
    fn parses_minimal_grid() {
        let m = headerless("1,2\n3,4").unwrap();
        assert_eq!(m.counts().to_rows(), vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(m.journals().labels(), ["J1", "J2"]);
        assert_eq!(m.orientation(), Orientation::CitedRows);
    }

    #[test]
    fn accepts_crlf_and_trailing_newline() {
        let a = headerless("1,2\r\n3,4\r\n").unwrap();
        let b = headerless("1,2\n3,4").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(matches!(
            headerless("1,2\n3"),
            Err(Error::RaggedRow {
                line: 2,
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn rejects_non_square_and_degenerate_grids() {
        assert!(matches!(
            headerless("1,2,3\n4,5,6"),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
        assert_eq!(headerless("7").unwrap_err(), Error::TooSmall(1));
        assert_eq!(headerless("").unwrap_err(), Error::TooSmall(0));
    }

    #[test]
    fn rejects_bad_cells() {
        for bad in ["1,-2\n3,4", "1,x\n3,4", "1,NaN\n3,4", "1,inf\n3,4"] {
            assert!(
                matches!(headerless(bad), Err(Error::InvalidCell { line: 1, field: 2, .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn enforces_and_raises_size_cap() {
        let text = "1,0,0\n0,1,0\n0,0,1";
        let tight = ParseOptions {
            max_journals: 2,
            ..ParseOptions::default()
        };
        assert_eq!(
            parse_matrix_csv(text.as_bytes(), tight).unwrap_err(),
            Error::TooLarge { n: 3, limit: 2 }
        );
        assert!(parse_matrix_csv(text.as_bytes(), ParseOptions::default()).is_ok());
    }

    #[test]
    fn rejects_1025_journals_by_default() {
        let row = vec!["1"; 1025].join(",");
        let err = parse_matrix_csv(row.as_bytes(), ParseOptions::default()).unwrap_err();
        assert_eq!(err, Error::TooLarge { n: 1025, limit: 1024 });
    }

    #[test]
    fn labeled_mode() {
        let text = ",A,\"B, Inc\"\nA,1,2\n\"B, Inc\",3,4\n";
        let m = parse_matrix_csv(text.as_bytes(), ParseOptions::new(LabelsMode::Labeled)).unwrap();
        assert_eq!(m.journals().labels(), ["A", "B, Inc"]);
        assert_eq!(m.get(1, 0), 3.0);

        let mismatch = ",A,B\nA,1,2\nC,3,4";
        assert!(matches!(
            parse_matrix_csv(mismatch.as_bytes(), ParseOptions::new(LabelsMode::Labeled)),
            Err(Error::LabelMismatch { index: 1, .. })
        ));
        let dup = ",A,A\nA,1,2\nA,3,4";
        assert_eq!(
            parse_matrix_csv(dup.as_bytes(), ParseOptions::new(LabelsMode::Labeled)).unwrap_err(),
            Error::DuplicateLabel("A".into())
        );
    }

    #[test]
    fn serializes_zero_matrix() {
        let m = CitationMatrix::from_rows(&[vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(serialize_matrix_csv(&m, LabelsMode::Headerless), "0,0\n0,0");
    }

    #[test]
    fn labeled_round_trip_quotes_labels() {
        let m = CitationMatrix::with_labels(
            ["plain", "with, comma", "multi\nline", "say \"hi\""],
            &[
                vec![1.0, 0.5, 0.0, 2.0],
                vec![0.0, 1e-7, 3.0, 4.0],
                vec![5.0, 6.0, 7.0, 8.0],
                vec![9.0, 10.0, 11.0, 0.125],
            ],
        )
        .unwrap();
        let text = serialize_matrix_csv(&m, LabelsMode::Labeled);
        let back = parse_matrix_csv(text.as_bytes(), ParseOptions::new(LabelsMode::Labeled)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn negative_zero_is_normalised() {
        let m = CitationMatrix::from_rows(&[vec![-0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(serialize_matrix_csv(&m, LabelsMode::Headerless), "0,1\n1,0");
    }

    #[test]
    fn margins_of_small_matrices() {
        let id = CitationMatrix::from_rows(&[vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]]).unwrap();
        let t = margins(&id);
        assert_eq!(t.cited_totals, vec![1.0; 3]);
        assert_eq!(t.citing_totals, vec![1.0; 3]);
        assert_eq!(t.grand_total, 3.0);

        let zero = CitationMatrix::from_rows(&[vec![0.0; 2], vec![0.0; 2]]).unwrap();
        let t = margins(&zero);
        assert_eq!(t.cited_totals, vec![0.0; 2]);
        assert_eq!(t.citing_totals, vec![0.0; 2]);
        assert_eq!(t.grand_total, 0.0);
    }

    #[test]
    fn transpose_flips_orientation() {
        let m = CitationMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let t = transpose(&m);
        assert_eq!(t.get(0, 1), 3.0);
        assert_eq!(t.orientation(), Orientation::CitingRows);
        assert_eq!(transpose(&t), m);

        let sym = CitationMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(transpose(&sym).counts(), sym.counts());
    }

    #[test]
    fn strip_is_idempotent() {
        let m = CitationMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let s = strip_self_citations(&m);
        assert_eq!(s.counts().to_rows(), vec![vec![0.0, 2.0], vec![3.0, 0.0]]);
        assert_eq!(strip_self_citations(&s), s);
    }

    #[test]
    fn matrix_power_small_cases() {
        let m = CitationMatrix::from_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(matrix_power(&m, 1).unwrap(), *m.counts());
        assert_eq!(
            matrix_power(&m, 3).unwrap().to_rows(),
            vec![vec![1.0, 3.0], vec![0.0, 1.0]]
        );
        assert_eq!(matrix_power(&m, 0).unwrap_err(), Error::ZeroExponent);
    }

    #[test]
    fn matrix_power_reports_overflow_cell() {
        let m = CitationMatrix::with_labels(["a", "b"], &[vec![1e200, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(
            matrix_power(&m, 2).unwrap_err(),
            Error::NonFiniteCell {
                row: "a".into(),
                column: "a".into()
            }
        );
    }
}
