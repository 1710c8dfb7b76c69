use thiserror::Error;

/// Errors raised by the exact-arithmetic and construction layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("prime {p} is unusable: {reason}")]
    UnusablePrime { p: u64, reason: String },
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
