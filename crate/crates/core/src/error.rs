use thiserror::Error;

/// Errors for graph construction, solver preconditions, and oracle limits.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operation requires at least one edge")]
    EdgelessInput,

    #[error("edge ({0}, {1}) is not present in the graph")]
    EdgeNotFound(usize, usize),

    #[error("graph has {n} vertices, above the oracle ceiling of {ceiling}")]
    OracleCeilingExceeded { n: usize, ceiling: usize },

    #[error("input graph is disconnected; connected transversals are undefined")]
    DisconnectedInput,

    #[error("graph is not {s}P2-free: edges {witness:?} form an induced matching")]
    NotSp2Free {
        s: usize,
        witness: Vec<(usize, usize)>,
    },

    #[error("construction requires at least {required} edges, graph has {actual}")]
    TooFewEdges { required: usize, actual: usize },

    #[error("construction requires at least {required} vertices, graph has {actual}")]
    TooFewVertices { required: usize, actual: usize },

    #[error("graph has girth {girth} but the construction requires girth >= {required}")]
    GirthTooSmall { girth: usize, required: usize },

    #[error("no connected transversal found within padding budget {budget}")]
    BudgetExhausted { budget: usize },

    #[error("random filter produced no graph after {cap} attempts")]
    FilterCapExceeded { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
