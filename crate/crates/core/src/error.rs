use core::fmt;

/// Errors raised by graph construction, index evaluation, and the
/// verification harness.
///
/// Every rejected input gets its own variant so callers (and the CLI) can
/// map validation failures, arithmetic overflow, and harness misuse to
/// distinct diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A graph must have at least one vertex.
    EmptyGraph,
    /// A vertex id at or beyond the declared vertex count.
    VertexOutOfRange { vertex: usize, order: usize },
    /// An edge joining a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered vertex pair listed twice.
    DuplicateEdge { u: usize, v: usize },
    /// `vertex` is not reachable from vertex 0.
    Disconnected { vertex: usize },
    /// The queried pair is not an edge of the graph.
    NotAnEdge { u: usize, v: usize },
    /// An index value exceeded the 64-bit unsigned range.
    Overflow { index: &'static str },
    /// Exhaustive enumeration requested beyond the supported size.
    EnumerationLimit { requested: usize, limit: usize },
    /// A campaign configuration field is out of range.
    InvalidCampaign { reason: &'static str },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::EmptyGraph => write!(f, "graph must have at least one vertex"),
            Error::VertexOutOfRange { vertex, order } => {
                write!(
                    f,
                    "vertex id {vertex} out of range for graph on {order} vertices"
                )
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            Error::Disconnected { vertex } => {
                write!(
                    f,
                    "graph is disconnected: vertex {vertex} is unreachable from vertex 0"
                )
            }
            Error::NotAnEdge { u, v } => write!(f, "{{{u}, {v}}} is not an edge of the graph"),
            Error::Overflow { index } => {
                write!(f, "64-bit overflow while computing {index}")
            }
            Error::EnumerationLimit { requested, limit } => {
                write!(
                    f,
                    "exhaustive enumeration capped at {limit} vertices, requested {requested}"
                )
            }
            Error::InvalidCampaign { reason } => write!(f, "invalid campaign config: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
