use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph on {n} vertices exceeds the small-graph bound of {bound}")]
    SizeExceeded { n: usize, bound: usize },

    #[error("pattern must contain at least one edge")]
    EmptyPattern,

    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration budget of {budget} exceeded (would need {needed})")]
    BudgetExceeded { budget: u64, needed: u64 },

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("malformed color map at line {line}: {reason}")]
    ColorMap { line: usize, reason: String },

    #[error("no independent set of size {size} outside the excluded vertices")]
    NoIndependentSet { size: usize },

    #[error("input graphs share concrete colors")]
    ColorCollision,

    #[error("exact f(H) needs Turán values beyond the small-graph bound; it lies in [{lo}, {hi}]")]
    FOutOfBound { lo: usize, hi: usize },

    #[error("search failed to find a set guaranteed to exist: {0}")]
    SearchFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
