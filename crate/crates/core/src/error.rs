use thiserror::Error;

/// Errors produced by graph construction, parsing, and the verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}: only simple graphs are supported")]
    Loop(usize),

    #[error("operation requires at least one vertex")]
    EmptyGraph,

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("search scope exceeded: {0}")]
    ScopeCap(String),

    #[error("sequence length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("sequence sums differ: {0} vs {1}")]
    SumMismatch(f64, f64),

    #[error("sequences are not comparable under majorization")]
    NotComparable,

    #[error(
        "ambiguous maximum at n = {n}, nu = {nu}: runner-up gap {gap:e} is within float noise"
    )]
    AmbiguousMaximum { n: usize, nu: usize, gap: f64 },

    #[error("empty search universe for n = {n}, m = {m}")]
    EmptyUniverse { n: usize, m: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
