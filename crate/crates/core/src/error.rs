use std::fmt;

use thiserror::Error;

use crate::search::SearchResult;

/// What went wrong at a single event of a raw word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// A cap was applied with fewer than two strands present.
    NegativeCount,
    /// The strand index is out of range for the level it acts on.
    BadIndex { strands: usize },
    /// The word finished with strands still open.
    NonzeroEnd { strands: usize },
    /// A knot was expected but the word closes up into several loops.
    MultipleComponents { components: usize },
    /// A tangle word closed off a loop that does not reach the boundary.
    ClosedComponent,
    /// No events at all.
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// 0-based event position, `None` for whole-word problems.
    pub position: Option<usize>,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.position {
            write!(f, "event {}: ", p)?;
        }
        match &self.kind {
            ViolationKind::NegativeCount => write!(f, "cap with fewer than two strands"),
            ViolationKind::BadIndex { strands } => {
                write!(f, "index out of range for a level with {} strands", strands)
            }
            ViolationKind::NonzeroEnd { strands } => {
                write!(f, "word ends with {} open strands", strands)
            }
            ViolationKind::MultipleComponents { components } => {
                write!(f, "word presents a {}-component link, not a knot", components)
            }
            ViolationKind::ClosedComponent => write!(f, "tangle word closes off a loop"),
            ViolationKind::Empty => write!(f, "empty word"),
        }
    }
}

/// Every violation found while validating a raw event sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn single(position: Option<usize>, kind: ViolationKind) -> Self {
        ValidationReport { violations: vec![Violation { position, kind }] }
    }

    pub fn has(&self, pred: impl Fn(&ViolationKind) -> bool) -> bool {
        self.violations.iter().any(|v| pred(&v.kind))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// A lexical or grammatical problem in word text, with 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid word: {0}")]
    Validation(ValidationReport),
    #[error("syntax error at {0}")]
    Syntax(#[from] SyntaxError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("move {0} is not applicable")]
    InvalidMove(String),
    #[error("budget exceeded: {what}")]
    BudgetExceeded {
        what: String,
        /// Best result found before the budget ran out, for searches.
        best: Option<Box<SearchResult>>,
    },
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("words {first} and {second} have different knot polynomials")]
    BracketMismatch { first: usize, second: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<ValidationReport> for Error {
    fn from(r: ValidationReport) -> Self {
        Error::Validation(r)
    }
}

impl Error {
    pub(crate) fn budget(what: impl Into<String>) -> Self {
        Error::BudgetExceeded { what: what.into(), best: None }
    }

    pub(crate) fn multiple_components(components: usize) -> Self {
        Error::Validation(ValidationReport::single(
            None,
            ViolationKind::MultipleComponents { components },
        ))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
