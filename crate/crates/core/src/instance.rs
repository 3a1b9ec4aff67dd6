//! Instances, closed walks and the feasibility check every solver is
//! tested against.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph_by_edges, star_center, Edge, Graph, InducedSubgraph, Vertex};

/// A connected graph together with a non-empty set of customer edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    customers: Vec<Edge>,
}

impl Instance {
    pub fn new<I, E>(graph: Graph, customers: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut set = BTreeSet::new();
        for e in customers {
            let e: Edge = e.into();
            if !graph.contains_edge(e) {
                return Err(Error::EdgeNotInGraph(e));
            }
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        if set.is_empty() {
            return Err(Error::NoCustomers);
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Instance {
            graph,
            customers: set.into_iter().collect(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Customer edges in ascending order.
    pub fn customers(&self) -> &[Edge] {
        &self.customers
    }

    /// Number of non-customer edges, `|E - X|`.
    pub fn non_customer_count(&self) -> usize {
        self.graph.num_edges() - self.customers.len()
    }

    pub fn customer_subgraph(&self) -> InducedSubgraph {
        induced_subgraph_by_edges(&self.graph, &self.customers)
            .expect("customers are validated edges")
    }

    /// Center of `G[X]` when the customer edges form a star.
    pub fn star_center(&self) -> Option<Vertex> {
        star_center(&self.customers)
    }
}

/// A closed walk `v0, v1, ..., vk` with `vk == v0`, or a single vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedWalk {
    vertices: Vec<Vertex>,
}

impl ClosedWalk {
    /// Checks only the shape: non-empty, and closed when it has any edges.
    /// Adjacency is a property of a graph and is checked by [`verify_feasible`].
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        match (vertices.first(), vertices.last()) {
            (None, _) => Err(Error::InvalidWalk("empty vertex sequence".into())),
            (Some(a), Some(b)) if vertices.len() > 1 && a != b => Err(Error::InvalidWalk(format!(
                "walk starts at {a} but ends at {b}"
            ))),
            _ if vertices.len() == 2 => Err(Error::InvalidWalk(
                "a two-entry walk would be a self-loop".into(),
            )),
            _ => Ok(ClosedWalk { vertices }),
        }
    }

    pub fn single(v: Vertex) -> Self {
        ClosedWalk { vertices: vec![v] }
    }

    /// Closes an open cyclic sequence by appending its first vertex.
    pub fn from_cycle(cycle: &[Vertex]) -> Result<Self> {
        match cycle {
            [] => Err(Error::InvalidWalk("empty vertex sequence".into())),
            [v] => Ok(Self::single(*v)),
            _ => {
                let mut vertices = cycle.to_vec();
                vertices.push(cycle[0]);
                Self::new(vertices)
            }
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges, with repetition.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices.iter().copied().collect()
    }

    /// Concatenates another closed walk that starts where this one starts.
    pub fn concat(&self, other: &ClosedWalk) -> Result<ClosedWalk> {
        if other.start() != self.start() {
            return Err(Error::InvalidWalk(format!(
                "cannot splice a walk at {} into one at {}",
                other.start(),
                self.start()
            )));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Ok(ClosedWalk { vertices })
    }

    /// Rotation to the smallest vertex id, direction and starting occurrence
    /// chosen to give the lexicographically smallest sequence.
    pub fn canonical(&self) -> ClosedWalk {
        if self.vertices.len() == 1 {
            return self.clone();
        }
        let cycle = &self.vertices[..self.vertices.len() - 1];
        let k = cycle.len();
        let min = *cycle.iter().min().expect("non-empty");
        let mut best: Option<Vec<Vertex>> = None;
        for (i, _) in cycle.iter().enumerate().filter(|(_, &v)| v == min) {
            let forward: Vec<Vertex> = (0..k).map(|j| cycle[(i + j) % k]).collect();
            let backward: Vec<Vertex> = (0..k).map(|j| cycle[(i + k - j) % k]).collect();
            for cand in [forward, backward] {
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        let mut vertices = best.expect("min occurs in cycle");
        vertices.push(min);
        ClosedWalk { vertices }
    }
}

pub fn walk_length(walk: &ClosedWalk) -> usize {
    walk.length()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    InvalidVertex {
        position: usize,
        vertex: Vertex,
    },
    NotAdjacent {
        step: usize,
        from: Vertex,
        to: Vertex,
    },
    Uncovered(Edge),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidVertex { position, vertex } => {
                write!(
                    f,
                    "vertex {vertex} at position {position} is not in the graph"
                )
            }
            Violation::NotAdjacent { step, from, to } => {
                write!(f, "step {step}: {from} -> {to} is not an edge")
            }
            Violation::Uncovered(e) => write!(f, "customer edge {e} is not covered"),
        }
    }
}

/// Outcome of [`verify_feasible`]: `Ok(())` or the first violation found.
/// Walk steps are checked before coverage.
pub type Feasibility = std::result::Result<(), Violation>;

pub fn verify_feasible(inst: &Instance, walk: &ClosedWalk) -> Feasibility {
    let g = inst.graph();
    for (position, &vertex) in walk.vertices().iter().enumerate() {
        if vertex >= g.num_vertices() {
            return Err(Violation::InvalidVertex { position, vertex });
        }
    }
    for (step, pair) in walk.vertices().windows(2).enumerate() {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(Violation::NotAdjacent {
                step,
                from: pair[0],
                to: pair[1],
            });
        }
    }
    let mut on_walk = vec![false; g.num_vertices()];
    for &v in walk.vertices() {
        on_walk[v] = true;
    }
    match inst
        .customers()
        .iter()
        .find(|e| !on_walk[e.u] && !on_walk[e.v])
    {
        Some(&e) => Err(Violation::Uncovered(e)),
        None => Ok(()),
    }
}
