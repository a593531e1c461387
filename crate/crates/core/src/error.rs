use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Library-wide error type. Parse and semantic errors carry a 1-based
/// column into the offending spec text.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },

    #[error("invalid ring spec at column {col}: {msg}")]
    Semantic { col: usize, msg: String },

    #[error("{0}")]
    Unsupported(String),

    #[error("{what} {needed} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        needed: usize,
        cap: usize,
    },

    /// A freshly built multiplication/addition table violated a ring axiom.
    /// This signals a bug in the construction code, not bad user input.
    #[error("ring axiom self-check failed: {0}")]
    AxiomCheck(String),

    #[error("not a proper ideal: {0}")]
    BadIdeal(String),

    #[error("failed to serialize report: {0}")]
    Serialize(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
