use thiserror::Error;

/// Errors raised by graph construction, the oracles, the finder and the
/// experiment harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("vertex {0} lies in the excluded set")]
    VertexInExcluded(usize),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("a={a} and b={b} must satisfy a <= b and a = b (mod 2)")]
    BadParity { a: usize, b: usize },
    #[error("require 1 <= a < b, got a={a}, b={b}")]
    BadRange { a: usize, b: usize },
    #[error("k={0} must be odd")]
    EvenK(usize),
    #[error("k={0} must be at least 3")]
    KTooSmall(usize),
    #[error("bad m={m}: {reason}")]
    BadM { m: usize, reason: String },
    #[error("instance of size {size} exceeds the exhaustive limit {max}")]
    TooLarge { size: usize, max: usize },
    #[error("invalid parity spec: {0}")]
    InvalidSpec(String),
    #[error("vertex {0} has g(v) greater than its degree")]
    InfeasibleVertex(usize),
    #[error("matching is not perfect on the gadget")]
    NotPerfect,
    #[error("edge {0}-{1} is not in the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("syntax error on line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("bad config: {0}")]
    BadConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
