use thiserror::Error;

use crate::graph::{Edge, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {num_vertices} vertices")]
    InvalidVertex { vertex: Vertex, num_vertices: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("edge {0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),

    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("customer edge set is empty")]
    NoCustomers,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {to} is unreachable from vertex {from}")]
    Unreachable { from: Vertex, to: Vertex },

    #[error("{what}: size {size} exceeds budget {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("customer edges form a star centered at vertex {0}")]
    StarInstance(Vertex),

    #[error("instance is not a grid instance")]
    NotAGrid,

    #[error("invalid rectilinear TSP instance: {0}")]
    InvalidRectInstance(String),

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),
}
