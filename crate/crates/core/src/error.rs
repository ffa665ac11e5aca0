use thiserror::Error;

use crate::model::{MarkVariant, VertexId};

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An arity-like parameter (uniformity `r`, or cycle length `m`) is below
    /// its minimum.
    #[error("arity parameter {0} out of range")]
    BadArity(u32),

    /// The one-extreme cycle family requires `n - r` even.
    #[error("bad parity: n={n}, r={r} requires n - r even")]
    BadParity { r: u32, n: u32 },

    /// An edge has the wrong number of vertices for the hypergraph's `r`.
    #[error("edge has {got} vertices, expected {expected}")]
    EdgeWrongSize { expected: u32, got: usize },

    /// A vertex appears twice inside one edge.
    #[error("vertex {0} repeated inside an edge")]
    RepeatedVertex(VertexId),

    /// A vertex id lies outside `1..=n`.
    #[error("vertex {id} outside 1..={n}")]
    VertexOutOfRange { id: VertexId, n: u32 },

    /// A marked vertex is not a member of its edge.
    #[error("marked vertex {0} is not a member of its edge")]
    MarkNotInEdge(VertexId),

    /// A two-extreme boundary pair collapses, or a min&max pair has A = B.
    #[error("the two marked vertices of an edge must be distinct")]
    DuplicateBoundary,

    /// Two edges share the same vertex set.
    #[error("repeated edge vertex set")]
    DuplicateEdge,

    /// An operation was applied to a hypergraph of the wrong variant.
    #[error("wrong mark variant: expected {expected}, got {got}")]
    WrongVariant {
        expected: MarkVariant,
        got: MarkVariant,
    },

    /// An operation requires a specific uniformity.
    #[error("wrong uniformity: expected r={expected}, got r={got}")]
    WrongArity { expected: u32, got: u32 },

    /// A linear order mentions a vertex outside the hypergraph, or repeats one.
    #[error("order is not a permutation of a vertex subset")]
    OrderNotOverSubset,

    /// The one-extreme solver would have to enumerate too many component
    /// colorings.
    #[error("coloring space too large: {components} components exceeds cap {cap}")]
    ColoringSpaceTooLarge { components: usize, cap: usize },

    /// An exhaustive census over the full marking space exceeds the budget.
    #[error("marking space of {space} instances exceeds budget {budget}")]
    BudgetExceeded { space: u128, budget: u64 },

    /// A family generator was invoked without a parameter it needs.
    #[error("family parameter --{0} is required")]
    MissingParam(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
