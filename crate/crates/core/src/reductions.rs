//! The two hardness reductions, used as instance generators and
//! cross-checks: rectilinear TSP to grid STAR, and vertex cover via STAR on
//! a complete graph.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::cover::VertexCover;
use crate::error::{Error, Result};
use crate::graph::{is_star_graph, Edge, Graph, Vertex};
use crate::instance::Instance;
use crate::solver::StarSolver;

/// Distinct points with positive integer coordinates and a tour-length bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectTspInstance {
    points: Vec<(u64, u64)>,
    bound: u64,
}

impl RectTspInstance {
    pub fn new(points: Vec<(u64, u64)>, bound: u64) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidRectInstance("no points".into()));
        }
        if bound == 0 {
            return Err(Error::InvalidRectInstance("bound must be positive".into()));
        }
        if let Some(p) = points.iter().find(|p| p.0 == 0 || p.1 == 0) {
            return Err(Error::InvalidRectInstance(format!(
                "point ({}, {}) has a non-positive coordinate",
                p.0, p.1
            )));
        }
        if let Some(p) = points.iter().duplicates().next() {
            return Err(Error::InvalidRectInstance(format!(
                "point ({}, {}) appears twice",
                p.0, p.1
            )));
        }
        Ok(RectTspInstance { points, bound })
    }

    pub fn points(&self) -> &[(u64, u64)] {
        &self.points
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Largest coordinate over all points.
    pub fn max_coordinate(&self) -> u64 {
        self.points.iter().map(|p| p.0.max(p.1)).max().unwrap_or(1)
    }
}

fn manhattan(a: (u64, u64), b: (u64, u64)) -> u64 {
    a.0.abs_diff(b.0) + a.1.abs_diff(b.1)
}

pub fn rect_tsp_exact(r: &RectTspInstance) -> Result<u64> {
    rect_tsp_exact_within(r, &Budget::default())
}

/// Shortest Manhattan tour through all points, by trying every order that
/// starts at the first point.
pub fn rect_tsp_exact_within(r: &RectTspInstance, budget: &Budget) -> Result<u64> {
    let pts = r.points();
    if pts.len() > budget.rect_points {
        return Err(Error::BudgetExceeded {
            what: "rectilinear TSP points",
            size: pts.len(),
            limit: budget.rect_points,
        });
    }
    if pts.len() == 1 {
        return Ok(0);
    }
    let best = (1..pts.len())
        .permutations(pts.len() - 1)
        .map(|rest| {
            let order: Vec<usize> = std::iter::once(0).chain(rest).collect();
            order
                .iter()
                .zip(order.iter().cycle().skip(1))
                .map(|(&a, &b)| manhattan(pts[a], pts[b]))
                .sum::<u64>()
        })
        .min()
        .expect("at least one order");
    Ok(best)
}

/// A grid STAR instance built from a rectilinear TSP instance.
#[derive(Debug, Clone)]
pub struct GridReduction {
    pub instance: Instance,
    /// Scale factor `c = 2(|P| + 1)`.
    pub scale: u64,
    /// Length bound `K = c L`.
    pub k: u64,
    /// Grid vertex of `c p_i`, in point order.
    pub id_map: Vec<Vertex>,
    /// Smallest coordinate on each axis (`c`) and the largest.
    pub low: u64,
    pub high: u64,
}

impl GridReduction {
    /// Grid vertex at plane point `(x, y)`, `low <= x, y <= high`.
    pub fn vertex_at(&self, x: u64, y: u64) -> Vertex {
        let side = (self.high - self.low + 1) as usize;
        let row = (self.high - y) as usize;
        let col = (x - self.low) as usize;
        row * side + col
    }
}

pub fn reduce_rect_tsp_to_grid_star(r: &RectTspInstance) -> Result<GridReduction> {
    reduce_rect_tsp_to_grid_star_within(r, &Budget::default())
}

/// Scales every point by `c = 2(|P| + 1)` into the grid of integer points of
/// `[c, c m] x [c, c m]` (`m` the largest coordinate). Point `(x, y)` is
/// vertex `(c m - y) * side + (x - c)`. Each scaled point contributes the
/// incident edge toward its smallest-id neighbor as a customer, and
/// `K = c L`.
///
/// When every point is `(1, 1)` that square is a single vertex with no
/// edges; the grid is then widened to `[c, c + 1]^2` so the point has an
/// incident edge.
pub fn reduce_rect_tsp_to_grid_star_within(
    r: &RectTspInstance,
    budget: &Budget,
) -> Result<GridReduction> {
    let n = r.points().len() as u64;
    let scale = 2 * (n + 1);
    let low = scale;
    let high = (scale * r.max_coordinate()).max(low + 1);
    let side = (high - low + 1) as usize;
    let cells = side.saturating_mul(side);
    if cells > budget.reduction_vertices {
        return Err(Error::BudgetExceeded {
            what: "reduction grid vertices",
            size: cells,
            limit: budget.reduction_vertices,
        });
    }
    let graph = Graph::grid(side, side)?;
    let vertex_at = |x: u64, y: u64| ((high - y) as usize) * side + (x - low) as usize;
    let mut id_map = Vec::with_capacity(r.points().len());
    let mut customers = Vec::with_capacity(r.points().len());
    for &(x, y) in r.points() {
        let v = vertex_at(scale * x, scale * y);
        id_map.push(v);
        customers.push(Edge::new(v, graph.neighbors(v)[0]));
    }
    Ok(GridReduction {
        instance: Instance::new(graph, customers)?,
        scale,
        k: scale * r.bound(),
        id_map,
        low,
        high,
    })
}

/// Vertex cover through a STAR solver on the complete graph `K(V)` with the
/// edges of `g` as customers. The walk's vertex set is the cover.
pub fn vc_via_star<S: StarSolver + ?Sized>(g: &Graph, solver: &S) -> Result<VertexCover> {
    if g.num_edges() == 0 {
        return Ok(VertexCover::new(Vec::new()));
    }
    if let Some(center) = is_star_graph(g) {
        return Ok(VertexCover::new(vec![center]));
    }
    let complete = Graph::complete(g.num_vertices())?;
    let inst = Instance::new(complete, g.edges().iter().copied())?;
    let report = solver.solve(&inst)?;
    let vertices: BTreeSet<Vertex> = report.walk.vertex_set();
    Ok(VertexCover::new(vertices.into_iter().collect()))
}
