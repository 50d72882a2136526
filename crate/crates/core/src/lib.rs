//! Journal-level citation indicators computed from square cited×citing
//! matrices: Pinski-Narin influence weights, power-weakness ratios,
//! margin counts and self-citation diagnostics, plus tools for measuring
//! how sensitive each indicator is to within-journal self-citations.

pub mod error;
pub mod fixture;
pub mod influence;
pub mod matrix;
pub mod sensitivity;

pub use error::{Branch, Error, ErrorKind, Result};
pub use influence::{
    impact_ratio, influence_trace, influence_weights, pinski_narin_normalize, power_iterate, power_weakness_ratio,
    raw_citation_counts, self_citation_diagnostics, IterationMode, IterationStep, IterationTrace, JournalDiagnostics,
    LabeledSquare, Normalization, NormalizedMatrix, PowerWeakness, SelfCitationDiagnostics, WeightVector,
};
pub use matrix::{
    margins, matrix_power, parse_matrix_csv, serialize_matrix_csv, strip_self_citations, transpose, CitationMatrix,
    JournalSet, LabelsMode, MarginTotals, Orientation, ParseOptions, SquareMatrix,
};
pub use sensitivity::{
    convergence_profile, linear_fit, linear_fit_values, self_citation_sensitivity, ConvergenceProfile, DecayRatio,
    Indicator, LinearFit, SensitivityReport,
};
