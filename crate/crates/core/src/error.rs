use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be at least {min}, got {n}")]
    BadN { n: usize, min: usize },
    #[error("color count must be at least {min}, got {k}")]
    BadK { k: usize, min: usize },
    #[error("pair {{{u},{v}}} has no color")]
    MissingEdge { u: usize, v: usize },
    #[error("pair {{{u},{v}}} assigned more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("color {color} out of range for k = {k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    BadVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} has odd degree {degree}")]
    NotEven { vertex: usize, degree: usize },
    #[error("component is not connected")]
    NotConnected,
    #[error("component has no edges")]
    EmptyComponent,
    #[error("{value} is not prime")]
    NotPrime { value: usize },
    #[error("blob size must be at least 1")]
    BadM,
    #[error("instance too large: {size} exceeds limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
