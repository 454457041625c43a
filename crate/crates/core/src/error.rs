use thiserror::Error;

/// Errors shared across the library.
///
/// `InternalInvariantViolation` is special: it signals that a step the
/// underlying constructive argument rules out has occurred anyway, which
/// means either the input was corrupted or the implementation has a bug.
/// Callers should treat it as fatal rather than recoverable.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate hyperedge at position {index}")]
    DuplicateEdge { index: usize },
    #[error("hyperedge at position {index} has size {size}, not allowed here")]
    EdgeSizeOutOfRange { index: usize, size: usize },
    #[error("hyperedge at position {index} mentions vertex {vertex}, outside 1..={n}")]
    VertexOutOfRange { index: usize, vertex: u32, n: u32 },
    #[error("hyperedge at position {index} repeats vertex {vertex}")]
    RepeatedVertexInEdge { index: usize, vertex: u32 },
    #[error("subset must contain at least 2 vertices")]
    EmptySubset,
    #[error("edge index {index} out of range (hypergraph has {len} edges)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("hypergraph is not covering: pair {{{u},{v}}} lies in no hyperedge")]
    NotCovering { u: u32, v: u32 },
    #[error("need at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("length {length} outside the valid range {min}..={max}")]
    LengthOutOfRange { length: usize, min: usize, max: usize },
    #[error("request exceeds enumeration cap: {0}")]
    CapExceeded(String),
    #[error("weighting has {got} entries, hypergraph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation requires a k-uniform hypergraph (single edge size)")]
    NotUniform,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("precondition could not be checked: {0}")]
    PreconditionNotChecked(String),
    #[error("cycle is not rainbow: pair {{{u},{v}}} repeats a color")]
    NotRainbow { u: u32, v: u32 },
    #[error("coloring inconsistent with hypergraph at pair {{{u},{v}}}")]
    ColoringMismatch { u: u32, v: u32 },
    #[error("internal invariant violation: {0}")]
    InternalInvariantViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
