use thiserror::Error;

use crate::structure::NotBrickReason;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("vertex set over {got} vertices used with a graph on {expected} vertices")]
    SetSizeMismatch { expected: usize, got: usize },
    #[error("doubling needs a simple all-positive graph")]
    NotSimplePositive,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graphs do not share the same underlying edge sequence")]
    UnderlyingMismatch,
    #[error("graph is not a block")]
    NotABlock,
    #[error("not a brick: {0}")]
    NotABrick(NotBrickReason),
    #[error("assignment covers {got} vertices, graph has {expected}")]
    PartialAssignment { expected: usize, got: usize },
    #[error("ordering is not a permutation of the vertex set")]
    BadOrdering,
    #[error("vertex {0} is separating")]
    SeparatingVertex(usize),
    #[error("color {color} is not in the list of vertex {vertex}")]
    ColorNotInList { vertex: usize, color: i64 },
    #[error("operation needs at least two vertices")]
    TooFewVertices,
    #[error("list of vertex {vertex} has {size} colors, degree is {degree}")]
    ListBelowDegree {
        vertex: usize,
        size: usize,
        degree: usize,
    },
    #[error("graph is colorable from the given lists")]
    Colorable,
    #[error("graph is not critical for the given lists")]
    NotCritical,
    #[error("palette of {0} distinct colors exceeds the solver limit of 128")]
    PaletteTooLarge(usize),
    #[error("symmetric brick needs an even degree, got {0}")]
    OddSymmetricDegree(usize),
    #[error("budget exceeded: needs {needed}, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("k = {0} is below the minimum of 4")]
    KTooSmall(usize),
    #[error("k must be at least 1")]
    KZero,
    #[error("a balanced complete graph of order k is excluded")]
    ExcludedBalancedComplete,
    #[error("graph has parallel edges")]
    NotSimple,
    #[error("enumeration bound exceeded: {0}")]
    EnumerationBound(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("vertex {0} has no list")]
    UncoveredVertex(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
