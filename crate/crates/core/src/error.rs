use thiserror::Error;

/// Errors produced by distribution construction and entropy measures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EntropyError {
    #[error("empty sequence")]
    EmptySequence,

    #[error("invalid base: {0} (must be a finite number greater than 1)")]
    InvalidBase(f64),

    #[error("invalid probability {0} (must lie in [0, 1])")]
    InvalidProbability(f64),

    #[error("duplicate category in probability listing")]
    DuplicateCategory,

    #[error("probabilities sum to {sum}, expected 1")]
    NotNormalized { sum: f64 },

    #[error("variable index {index} out of range ({variables} variables)")]
    IndexOutOfRange { index: usize, variables: usize },

    #[error("empty view")]
    EmptyView,

    #[error("duplicate variable index {0} in view")]
    DuplicateViewIndex(usize),

    #[error("self-conditioning: target and given are both variable {0}")]
    SelfConditioning(usize),

    #[error("incomparable schemas: the two sets name different variables")]
    IncomparableSchemas,

    #[error("empty object set")]
    EmptyObjectSet,

    #[error("object set has no variables")]
    NoVariables,

    #[error("duplicate variable name '{0}'")]
    DuplicateVariable(String),

    #[error("object {object} has {got} values, expected {expected}")]
    RaggedObject {
        object: usize,
        got: usize,
        expected: usize,
    },
}

/// Errors produced while parsing or serializing delimited tables.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TableError {
    #[error("no header")]
    NoHeader,

    #[error("duplicate column name '{0}'")]
    DuplicateColumn(String),

    #[error("row {row} has {got} cell{}, expected {expected}", if *got == 1 { "" } else { "s" })]
    RaggedRow {
        row: u64,
        got: usize,
        expected: usize,
    },

    #[error("line {line}: {message}")]
    Malformed { line: u64, message: String },

    #[error(
        "invalid delimiter {0:?} (must be a single ASCII character other than quote or newline)"
    )]
    InvalidDelimiter(char),
}
