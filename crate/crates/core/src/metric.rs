//! Finite metrics and the shortest-path metric closure of a vertex subset.

use crate::error::{Error, Result};
use crate::graph::{BfsTree, Graph, Vertex};

/// A distance matrix over labelled points. Points are addressed by their
/// index `0..len()`; `points()` holds the labels (vertex ids).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    points: Vec<Vertex>,
    dist: Vec<u64>,
}

impl Metric {
    /// Builds a metric from a square matrix and validates it.
    pub fn new(points: Vec<Vertex>, matrix: Vec<Vec<u64>>) -> Result<Self> {
        let k = points.len();
        if k == 0 {
            return Err(Error::InvalidMetric("no points".into()));
        }
        if matrix.len() != k || matrix.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidMetric(format!("matrix is not {k}x{k}")));
        }
        let metric = Metric {
            points,
            dist: matrix.into_iter().flatten().collect(),
        };
        metric.validate()?;
        Ok(metric)
    }

    pub(crate) fn from_flat_unchecked(points: Vec<Vertex>, dist: Vec<u64>) -> Self {
        debug_assert_eq!(dist.len(), points.len() * points.len());
        Metric { points, dist }
    }

    /// Checks identity, symmetry and the triangle inequality. Cubic.
    pub fn validate(&self) -> Result<()> {
        let k = self.len();
        for i in 0..k {
            if self.dist(i, i) != 0 {
                return Err(Error::InvalidMetric(format!("d({i},{i}) != 0")));
            }
            for j in 0..k {
                if self.dist(i, j) != self.dist(j, i) {
                    return Err(Error::InvalidMetric(format!("d({i},{j}) != d({j},{i})")));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for via in 0..k {
                    if self.dist(i, j) > self.dist(i, via) + self.dist(via, j) {
                        return Err(Error::InvalidMetric(format!(
                            "triangle inequality fails for {i}, {via}, {j}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vertex] {
        &self.points
    }

    pub fn dist(&self, i: usize, j: usize) -> u64 {
        self.dist[i * self.points.len() + j]
    }

    /// Cost of visiting `order` cyclically, closing step included.
    pub fn cycle_cost(&self, order: &[usize]) -> u64 {
        if order.len() < 2 {
            return 0;
        }
        order
            .iter()
            .zip(order.iter().cycle().skip(1))
            .map(|(&a, &b)| self.dist(a, b))
            .sum()
    }
}

/// `d_G` restricted to a vertex subset, with one BFS tree per point so
/// shortest paths can be rebuilt without searching again.
#[derive(Debug, Clone)]
pub struct MetricClosure {
    metric: Metric,
    trees: Vec<BfsTree>,
}

impl MetricClosure {
    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    /// Deterministic shortest path between points `i` and `j` (indices).
    pub fn path(&self, i: usize, j: usize) -> Vec<Vertex> {
        self.trees[i]
            .path_to(self.metric.points[j])
            .expect("closure points are mutually reachable")
    }
}

/// Runs one BFS per subset vertex. Duplicate subset entries are kept as
/// separate points at distance 0.
pub fn metric_closure(g: &Graph, subset: &[Vertex]) -> Result<MetricClosure> {
    if subset.is_empty() {
        return Err(Error::InvalidMetric("no points".into()));
    }
    let k = subset.len();
    let mut dist = Vec::with_capacity(k * k);
    let mut trees = Vec::with_capacity(k);
    for &s in subset {
        let tree = g.bfs_tree(s)?;
        for &t in subset {
            g.check_vertex(t)?;
            dist.push(tree.dist(t).ok_or(Error::Unreachable { from: s, to: t })?);
        }
        trees.push(tree);
    }
    Ok(MetricClosure {
        metric: Metric::from_flat_unchecked(subset.to_vec(), dist),
        trees,
    })
}
