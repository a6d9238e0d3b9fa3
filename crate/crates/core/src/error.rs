use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("subspace is not contained in the claimed enclosing space")]
    NotContained,

    #[error("algebra is not nilpotent (power chain stabilizes at dimension {stabilized_dim})")]
    NotNilpotent { stabilized_dim: usize },

    #[error("form is not a cocycle: {condition} fails at basis triple ({i},{j},{k})")]
    NotACocycle {
        condition: &'static str,
        i: usize,
        j: usize,
        k: usize,
    },

    #[error("matrix is not an automorphism")]
    NotAutomorphism,

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("algebra has no generator words and none could be derived")]
    MissingGeneratorWords,

    #[error("algebra is not one-generated")]
    NotOneGenerated,

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),

    #[error("basis index e{index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("no catalog entries for dimension {0}")]
    UnknownDimension(usize),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("division by zero while evaluating `{0}`")]
    DivisionByZero(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
