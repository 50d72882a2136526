//! Bundled datasets.

use crate::matrix::{parse_matrix_csv, CitationMatrix, LabelsMode, ParseOptions};

/// Labeled CSV of the 1977 cross-citation counts among eight biochemistry
/// journals (Price, 1981). Rows are cited, columns citing.
pub const PRICE_1981_CSV: &str = include_str!("../fixtures/price1981.csv");

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &["price"];

pub fn price_1981() -> CitationMatrix {
    parse_matrix_csv(PRICE_1981_CSV.as_bytes(), ParseOptions::new(LabelsMode::Labeled))
        .expect("bundled fixture is well formed")
}

pub fn by_name(name: &str) -> Option<CitationMatrix> {
    match name {
        "price" | "price1981" => Some(price_1981()),
        _ => None,
    }
}
