use core::fmt;

/// Failures of the graph operations in this crate.
///
/// Every variant is a violated precondition; none of them are recoverable by
/// retrying with the same input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    TooManyVertices(usize),
    VertexOutOfRange { vertex: usize, n: usize },
    Loop(usize),
    DuplicateEdge(usize, usize),
    MissingEdge(usize, usize),
    EmptyVertexSet,
    /// A vertex set that must be a proper subset covers every vertex.
    NotProperSubset,
    SetTooSmall { size: usize, min: usize },
    IdentifyingAdjacent(usize, usize),
    EmptySplitSide,
    /// The two sides of a neighbor split do not partition the split vertex's
    /// neighborhood.
    InvalidSplit,
    ColorableInput,
    NotFourColorable,
    ImproperColoring(usize, usize),
    ColoringLength { expected: usize, got: usize },
    EmptyBoundary,
    NotCollapsible,
    OutOfRange(&'static str),
    NotInCluster(usize),
    NotFiveCritical,
    /// The identified graph of a proper subset of a 5-critical graph turned
    /// out 4-colorable. This cannot happen for 5-critical input.
    IdentifiedColorable,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooManyVertices(n) => write!(f, "{n} vertices exceeds the 64-vertex cap"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::Loop(v) => write!(f, "loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            Error::MissingEdge(u, v) => write!(f, "edge {u}-{v} is not present"),
            Error::EmptyVertexSet => f.write_str("vertex set is empty"),
            Error::NotProperSubset => f.write_str("vertex set must be a proper subset"),
            Error::SetTooSmall { size, min } => {
                write!(f, "vertex set has {size} vertices, need at least {min}")
            }
            Error::IdentifyingAdjacent(u, v) => {
                write!(f, "identifying adjacent vertices {u} and {v}")
            }
            Error::EmptySplitSide => f.write_str("neighbor split has an empty side"),
            Error::InvalidSplit => f.write_str("neighbor split does not partition the neighborhood"),
            Error::ColorableInput => f.write_str("graph is 4-colorable"),
            Error::NotFourColorable => f.write_str("induced subgraph is not 4-colorable"),
            Error::ImproperColoring(u, v) => write!(f, "coloring is improper on edge {u}-{v}"),
            Error::ColoringLength { expected, got } => {
                write!(f, "coloring covers {got} vertices, expected {expected}")
            }
            Error::EmptyBoundary => f.write_str("vertex set has an empty boundary"),
            Error::NotCollapsible => f.write_str("vertex set is not collapsible"),
            Error::OutOfRange(what) => write!(f, "{what} out of range"),
            Error::NotInCluster(v) => {
                write!(f, "vertex {v} does not lie in a cluster of size at least two")
            }
            Error::NotFiveCritical => f.write_str("graph is not 5-critical"),
            Error::IdentifiedColorable => {
                f.write_str("identified graph is 4-colorable; input cannot be 5-critical")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
