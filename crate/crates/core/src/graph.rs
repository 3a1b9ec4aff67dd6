//! Simple unweighted graphs, grid graphs and breadth-first distances.
//!
//! Adjacency lists are kept sorted by vertex id, so every traversal in the
//! crate visits neighbors in ascending order and reconstructed shortest paths
//! are reproducible.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Normalizes the endpoint order. Callers must reject `a == b` themselves.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    General,
    Grid { rows: usize, cols: usize },
}

/// Immutable simple graph over the dense vertex ids `0..num_vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
    kind: GraphKind,
}

impl Graph {
    /// Builds a general graph, rejecting self-loops, duplicates and
    /// out-of-range endpoints. Edges are stored sorted.
    pub fn new<I, E>(num_vertices: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(Vertex, Vertex)>,
    {
        if num_vertices == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= num_vertices {
                    return Err(Error::InvalidVertex {
                        vertex: x,
                        num_vertices,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let edge = Edge::new(a, b);
            if !set.insert(edge) {
                return Err(Error::DuplicateEdge(edge));
            }
        }
        Ok(Self::from_sorted(
            num_vertices,
            set.into_iter().collect(),
            GraphKind::General,
        ))
    }

    /// The `rows x cols` grid graph. Vertex `(r, c)` has id `r * cols + c`,
    /// row 0 on top.
    pub fn grid(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::with_capacity(2 * rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let id = r * cols + c;
                if c + 1 < cols {
                    edges.push(Edge::new(id, id + 1));
                }
                if r + 1 < rows {
                    edges.push(Edge::new(id, id + cols));
                }
            }
        }
        edges.sort_unstable();
        Ok(Self::from_sorted(
            rows * cols,
            edges,
            GraphKind::Grid { rows, cols },
        ))
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, edges)
    }

    fn from_sorted(num_vertices: usize, edges: Vec<Edge>, kind: GraphKind) -> Self {
        let mut adjacency = vec![Vec::new(); num_vertices];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            num_vertices,
            edges,
            adjacency,
            kind,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.num_vertices && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.num_vertices {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                num_vertices: self.num_vertices,
            })
        }
    }

    /// A copy of this graph with one edge removed (kind becomes `General`).
    pub fn without_edge(&self, e: Edge) -> Graph {
        let edges = self.edges.iter().copied().filter(|&x| x != e).collect();
        Self::from_sorted(self.num_vertices, edges, GraphKind::General)
    }

    pub fn is_connected(&self) -> bool {
        bfs_distances(self, 0)
            .map(|d| d.iter().all(Option::is_some))
            .unwrap_or(false)
    }

    /// Breadth-first tree rooted at `source`, neighbors explored in ascending id.
    pub fn bfs_tree(&self, source: Vertex) -> Result<BfsTree> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.num_vertices];
        let mut parent = vec![None; self.num_vertices];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap_or(0);
            for &y in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        Ok(BfsTree {
            source,
            dist,
            parent,
        })
    }

    /// Deterministic shortest path `from -> to`, both endpoints included.
    pub fn shortest_path(&self, from: Vertex, to: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(to)?;
        self.bfs_tree(from)?.path_to(to)
    }
}

/// Distances and parent pointers of one breadth-first search.
#[derive(Debug, Clone)]
pub struct BfsTree {
    source: Vertex,
    dist: Vec<Option<u64>>,
    parent: Vec<Option<Vertex>>,
}

impl BfsTree {
    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn dist(&self, v: Vertex) -> Option<u64> {
        self.dist[v]
    }

    pub fn distances(&self) -> &[Option<u64>] {
        &self.dist
    }

    /// Path from the root to `to`, following parent pointers.
    pub fn path_to(&self, to: Vertex) -> Result<Vec<Vertex>> {
        if self.dist[to].is_none() {
            return Err(Error::Unreachable {
                from: self.source,
                to,
            });
        }
        let mut path = vec![to];
        let mut cur = to;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Ok(path)
    }
}

/// Unweighted shortest-path distances from `source`; `None` marks
/// unreachable vertices.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<Option<u64>>> {
    Ok(g.bfs_tree(source)?.dist)
}

/// `G[X]`: the endpoints of `x` re-indexed in ascending original id, with
/// `x` as the edge set.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_parent[i]` is the original id of local vertex `i`.
    pub to_parent: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn parent_id(&self, local: Vertex) -> Vertex {
        self.to_parent[local]
    }

    pub fn local_id(&self, parent: Vertex) -> Option<Vertex> {
        self.to_parent.binary_search(&parent).ok()
    }
}

pub fn induced_subgraph_by_edges(g: &Graph, x: &[Edge]) -> Result<InducedSubgraph> {
    let mut verts = BTreeSet::new();
    for &e in x {
        if !g.contains_edge(e) {
            return Err(Error::EdgeNotInGraph(e));
        }
        verts.insert(e.u);
        verts.insert(e.v);
    }
    let to_parent: Vec<Vertex> = verts.into_iter().collect();
    if to_parent.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let local = |v: Vertex| to_parent.binary_search(&v).expect("endpoint was inserted");
    let edges: Vec<(Vertex, Vertex)> = x.iter().map(|e| (local(e.u), local(e.v))).collect();
    let graph = Graph::new(to_parent.len(), edges)?;
    Ok(InducedSubgraph { graph, to_parent })
}

/// Returns a center if every edge of `g` shares one common vertex, i.e. the
/// non-isolated part of `g` is some `K_{1,l}`. For `K_2` the smaller id wins.
pub fn is_star_graph(g: &Graph) -> Option<Vertex> {
    star_center(g.edges())
}

/// Star test directly on an edge list.
pub fn star_center(edges: &[Edge]) -> Option<Vertex> {
    let first = edges.first()?;
    [first.u, first.v]
        .into_iter()
        .find(|&c| edges.iter().all(|e| e.touches(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn bfs_on_small_grid() {
        let g = Graph::grid(2, 2).unwrap();
        let d = bfs_distances(&g, 0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(1), Some(2)]);
    }

    #[test]
    fn bfs_on_path() {
        let d = bfs_distances(&path(3), 0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn bfs_marks_unreachable() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = bfs_distances(&g, 0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), None, None]);
        assert!(!g.is_connected());
    }

    #[test]
    fn bfs_rejects_bad_source() {
        let g = path(3);
        assert!(matches!(
            bfs_distances(&g, 3),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn construction_rejects_non_simple_graphs() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(Edge::new(0, 1)))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::InvalidVertex { .. })
        ));
        assert_eq!(
            Graph::new(0, Vec::<(usize, usize)>::new()),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn grid_ids_and_edges() {
        let g = Graph::grid(2, 3).unwrap();
        assert_eq!(g.num_vertices(), 6);
        assert_eq!(g.num_edges(), 7);
        assert!(g.has_edge(1, 4));
        assert!(g.has_edge(4, 5));
        assert!(!g.has_edge(2, 3));
        assert_eq!(g.kind(), GraphKind::Grid { rows: 2, cols: 3 });
        assert_eq!(Graph::grid(1, 1).unwrap().num_edges(), 0);
    }

    #[test]
    fn shortest_paths_prefer_low_ids() {
        let g = Graph::grid(2, 2).unwrap();
        assert_eq!(g.shortest_path(0, 3).unwrap(), vec![0, 1, 3]);
        assert_eq!(g.shortest_path(3, 0).unwrap(), vec![3, 1, 0]);
        assert_eq!(g.shortest_path(2, 2).unwrap(), vec![2]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = Graph::grid(2, 2).unwrap();
        let sub = induced_subgraph_by_edges(&g, &[Edge::new(0, 1)]).unwrap();
        assert_eq!(sub.graph.num_vertices(), 2);
        assert_eq!(sub.graph.edges(), &[Edge::new(0, 1)]);

        let p3 = path(3);
        let sub = induced_subgraph_by_edges(&p3, p3.edges()).unwrap();
        assert_eq!(sub.graph, p3);

        let g = Graph::grid(3, 3).unwrap();
        let sub = induced_subgraph_by_edges(&g, &[Edge::new(0, 1), Edge::new(0, 3)]).unwrap();
        assert_eq!(sub.to_parent, vec![0, 1, 3]);
        assert_eq!(is_star_graph(&sub.graph).map(|c| sub.parent_id(c)), Some(0));

        assert_eq!(
            induced_subgraph_by_edges(&g, &[Edge::new(0, 4)]).unwrap_err(),
            Error::EdgeNotInGraph(Edge::new(0, 4))
        );
    }

    #[test]
    fn star_recognition() {
        let k2 = Graph::new(8, [(7, 4)]).unwrap();
        assert_eq!(is_star_graph(&k2), Some(4));
        let k13 = Graph::new(4, [(2, 0), (2, 1), (2, 3)]).unwrap();
        assert_eq!(is_star_graph(&k13), Some(2));
        assert_eq!(is_star_graph(&path(3)), Some(1));
        assert_eq!(is_star_graph(&path(4)), None);
        let triangle = Graph::complete(3).unwrap();
        assert_eq!(is_star_graph(&triangle), None);
        assert_eq!(
            is_star_graph(&Graph::new(2, Vec::<(usize, usize)>::new()).unwrap()),
            None
        );
    }
}
