use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad failure class, used by callers that map errors to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or invalid input data.
    Data,
    /// A computation produced an undefined, non-finite or non-convergent result.
    Numerical,
}

/// Which side of a with/without self-citation comparison failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    WithSelfCitations,
    WithoutSelfCitations,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::WithSelfCitations => f.write_str("with self-citations"),
            Branch::WithoutSelfCitations => f.write_str("without self-citations"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRow { line: u64, expected: usize, found: usize },
    #[error("line {line}, field {field}: invalid count {value:?} (must be a finite number >= 0)")]
    InvalidCell { line: u64, field: usize, value: String },
    #[error("matrix is not square: {rows} rows of {cols} values")]
    NotSquare { rows: usize, cols: usize },
    #[error("journal label at position {0} is empty")]
    EmptyLabel(usize),
    #[error("duplicate journal label {0:?}")]
    DuplicateLabel(String),
    #[error("row label {row:?} does not match column label {column:?} at position {index}")]
    LabelMismatch { index: usize, row: String, column: String },
    #[error("matrix has {0} journal(s); at least 2 are required")]
    TooSmall(usize),
    #[error("matrix has {n} journals, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("malformed csv: {0}")]
    Csv(String),
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("inputs are labelled with different journal sets")]
    JournalMismatch,
    #[error("matrix power exponent must be at least 1")]
    ZeroExponent,
    #[error("invalid iteration mode: {0}")]
    InvalidMode(String),
    #[error("cell ({row:?}, {column:?}) overflowed to a non-finite value")]
    NonFiniteCell { row: String, column: String },
    #[error("journal {journal:?} makes no references; normalization would divide by zero")]
    ZeroReferences { journal: String },
    #[error("journal {journal:?} has zero weakness q(k); power-weakness ratio is undefined")]
    ZeroWeakness { journal: String },
    #[error("journal {journal:?} has publication count {value}; it must be positive")]
    NonPositivePublications { journal: String, value: f64 },
    #[error("journal {journal:?}: {quantity} is undefined (zero denominator)")]
    UndefinedRatio { journal: String, quantity: &'static str },
    #[error("iterate vanished at cycle {cycle}; the matrix annihilates the current vector")]
    VanishingIterate { cycle: usize },
    #[error("journal {journal:?} became non-finite at cycle {cycle}")]
    NonFiniteIterate { journal: String, cycle: usize },
    #[error("no convergence after {cycles} cycles (last L1 delta {delta:e}, tolerance {tolerance:e})")]
    NotConverged { cycles: usize, delta: f64, tolerance: f64 },
    #[error("convergence profile needs at least 3 cycles, trace has {0}")]
    TraceTooShort(usize),
    #[error("need at least 2 points for a fit, got {0}")]
    TooFewPoints(usize),
    #[error("x values are constant; slope and correlation are undefined")]
    ConstantRegressor,
    #[error("{branch}: {source}")]
    Branch {
        branch: Branch,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NonFiniteCell { .. }
            | Error::ZeroReferences { .. }
            | Error::ZeroWeakness { .. }
            | Error::UndefinedRatio { .. }
            | Error::VanishingIterate { .. }
            | Error::NonFiniteIterate { .. }
            | Error::NotConverged { .. }
            | Error::ConstantRegressor => ErrorKind::Numerical,
            Error::Branch { source, .. } => source.kind(),
            _ => ErrorKind::Data,
        }
    }

    pub(crate) fn in_branch(self, branch: Branch) -> Error {
        Error::Branch {
            branch,
            source: Box::new(self),
        }
    }
}
