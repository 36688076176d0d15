use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("value {value} out of range for universe of size {size} at {line}:{column}")]
    OutOfRange {
        value: String,
        size: usize,
        line: usize,
        column: usize,
    },
    #[error("table for `{symbol}` has wrong length at {line}:{column}: expected {expected} entries, found {found}")]
    WrongTableLength {
        symbol: String,
        expected: usize,
        found: usize,
        line: usize,
        column: usize,
    },
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("no binary function symbol to use as the operation")]
    NoBinaryOperation,
    #[error("structure has no function symbols")]
    NoFunctionSymbols,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("element or rank {value} out of range (bound {bound})")]
    IndexOutOfRange { value: usize, bound: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("structure size {size} exceeds the configured cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("tuple space of size {size}^{m} needs {required} entries, over the cap of {cap}")]
    TupleBudget {
        size: usize,
        m: usize,
        required: String,
        cap: usize,
    },
    #[error("missing orbit partition for tuple length {0}")]
    MissingPartition(usize),
    #[error("relation is not automorphism-invariant: orbit of {inside:?} contains {outside:?} which is not a member")]
    NotInvariant { inside: Vec<usize>, outside: Vec<usize> },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by exceeding a size or tuple budget.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::SizeCap { .. } | Error::TupleBudget { .. })
    }
}
