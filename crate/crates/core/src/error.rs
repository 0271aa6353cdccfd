use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {symbol} at index {index} is outside the alphabet [1:{alphabet_size}]")]
    SymbolOutOfRange {
        symbol: u32,
        index: usize,
        alphabet_size: u32,
    },

    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("position {t} is outside [1:{len}]")]
    PositionOutOfRange { t: usize, len: usize },

    #[error("pattern of length {pattern_len} does not fit in a window of size {window}")]
    PatternLongerThanWindow { pattern_len: usize, window: usize },

    #[error("budget exceeded: {required} {what} required, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        budget: u128,
    },

    #[error("empty word where a nonempty word is required")]
    EmptyWord,

    #[error("partial words have mismatched lengths: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid partial-word cell {0:?}")]
    InvalidCell(char),

    #[error("clause {clause} contains both x{var} and its negation")]
    TautologicalClause { clause: usize, var: u32 },

    #[error("clause {clause} references variable {var} outside [1:{num_vars}]")]
    VariableOutOfRange {
        clause: usize,
        var: u32,
        num_vars: u32,
    },

    #[error("vectors must share one dimension >= 1 and both sets must be nonempty")]
    MalformedOvInstance,

    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
