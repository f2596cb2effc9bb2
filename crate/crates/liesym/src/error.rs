use std::collections::BTreeSet;
use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("point has {0} entries, expected {1}")]
    PointLength(usize, usize),
    #[error("singular matrix")]
    Singular,
    #[error("{0} must be nonzero")]
    ZeroInput(&'static str),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

/// Syntax or semantic error in system-file input, with source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// 1-based column number.
    pub column: usize,
    /// Tokens that would have been accepted at this position.
    pub expected: BTreeSet<String>,
    /// What was actually found.
    pub found: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, expected: &[&str], found: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expected: Vec<&str> = self.expected.iter().map(|s| s.as_str()).collect();
        write!(
            f,
            "parse error at line {}, column {}: found {}, expected {}",
            self.line,
            self.column,
            self.found,
            expected.join(" | ")
        )
    }
}

impl std::error::Error for ParseError {}
