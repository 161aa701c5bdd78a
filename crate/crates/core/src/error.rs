use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("edge {edge} has negative weight {weight}")]
    NegativeWeight { edge: EdgeId, weight: i64 },

    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },

    #[error("graph carries no edge weights")]
    MissingWeights,

    #[error("degree spec has {got} values for a graph on {expected} vertices")]
    DegreeSpecLength { expected: usize, got: usize },

    #[error("f({vertex}) = {value} exceeds the degree {degree}")]
    DegreeExceeded {
        vertex: Vertex,
        value: usize,
        degree: usize,
    },

    #[error("edge id {0} does not belong to the host graph")]
    UnknownEdge(EdgeId),

    #[error("subgraph was built for a host with {got} edges, host has {expected}")]
    HostMismatch { expected: usize, got: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("red/blue imbalance at vertex {vertex}: {red} red, {blue} blue")]
    ColorImbalance {
        vertex: Vertex,
        red: usize,
        blue: usize,
    },

    #[error("edge {0} is colored both red and blue")]
    DoubleColored(EdgeId),

    #[error("not a switch on the given subgraph: {0}")]
    NotASwitch(String),

    #[error("not an alternating circuit: {0}")]
    NotAlternatingCircuit(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("solver invariant violated: {0}")]
    Internal(String),
}
