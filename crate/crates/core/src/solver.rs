//! The matching-cover + metric TSP pipeline, the exact oracle, and the
//! report type every solver returns.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::budget::Budget;
use crate::cover::{
    enumerate_minimal_covers_within, vc_exact_within, vc_matching_approx, VertexCover,
};
use crate::dense_grid::solve_dense_grid;
use crate::error::{Error, Result};
use crate::instance::{verify_feasible, ClosedWalk, Instance};
use crate::metric::{metric_closure, Metric, MetricClosure};
use crate::tsp::{tsp_double_tree, tsp_exact_held_karp_within, Tour, TspAlgorithm, TspBackend};

/// Which code path produced a walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgorithmTag {
    /// `G[X]` is a star; the walk is its center.
    StarCenter,
    MatchingTsp(TspBackend),
    /// Christofides was requested but its matching budget was exceeded.
    MatchingTspFallback,
    DenseGrid,
    Exact,
}

impl fmt::Display for AlgorithmTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmTag::StarCenter => f.write_str("star-center"),
            AlgorithmTag::MatchingTsp(b) => write!(f, "matching-tsp/{}", b.name()),
            AlgorithmTag::MatchingTspFallback => {
                f.write_str("matching-tsp/christofides->double-tree")
            }
            AlgorithmTag::DenseGrid => f.write_str("dense-grid"),
            AlgorithmTag::Exact => f.write_str("exact"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub walk: ClosedWalk,
    pub cover_used: Option<VertexCover>,
    pub tour_used: Option<Tour>,
    pub algorithm: AlgorithmTag,
    /// Proven ratio to the optimum, when one applies.
    pub guarantee_factor: Option<Ratio<u64>>,
    /// A certified lower bound on the optimal length, when known.
    pub lower_bound: Option<u64>,
}

impl SolveReport {
    pub fn length(&self) -> usize {
        self.walk.length()
    }

    fn star(center: usize, lower_bound: Option<u64>) -> Self {
        SolveReport {
            walk: ClosedWalk::single(center),
            cover_used: Some(VertexCover::new(vec![center])),
            tour_used: None,
            algorithm: AlgorithmTag::StarCenter,
            guarantee_factor: Some(Ratio::from_integer(1)),
            lower_bound,
        }
    }
}

/// Solver strategy, as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    MatchingTsp(TspBackend),
    DenseGrid,
    Exact,
}

impl Algorithm {
    pub fn solve_within(&self, inst: &Instance, budget: &Budget) -> Result<SolveReport> {
        match *self {
            Algorithm::MatchingTsp(backend) => solve_star_approx_within(inst, backend, budget),
            Algorithm::DenseGrid => solve_dense_grid(inst),
            Algorithm::Exact => solve_star_exact_within(inst, budget),
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    /// Accepts `matching-tsp` (Christofides), `matching-tsp/<backend>`,
    /// `dense-grid` and `exact`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some(("matching-tsp", backend)) => Ok(Algorithm::MatchingTsp(backend.parse()?)),
            None if s == "matching-tsp" => Ok(Algorithm::MatchingTsp(TspBackend::Christofides)),
            None if s == "dense-grid" => Ok(Algorithm::DenseGrid),
            None if s == "exact" => Ok(Algorithm::Exact),
            _ => Err(Error::Parse(format!("unknown algorithm `{s}`"))),
        }
    }
}

/// Anything that maps an instance to a feasible walk.
pub trait StarSolver {
    fn solve(&self, inst: &Instance) -> Result<SolveReport>;
}

impl StarSolver for Algorithm {
    fn solve(&self, inst: &Instance) -> Result<SolveReport> {
        self.solve_within(inst, &Budget::default())
    }
}

impl<F> StarSolver for F
where
    F: Fn(&Instance) -> Result<SolveReport>,
{
    fn solve(&self, inst: &Instance) -> Result<SolveReport> {
        self(inst)
    }
}

/// Concatenates one shortest path per consecutive tour pair (closing pair
/// included). The walk has exactly `tour.cost` edges.
pub fn stitch_tour(closure: &MetricClosure, tour: &Tour) -> Result<ClosedWalk> {
    let order = &tour.order;
    let points = closure.metric().points();
    let walk = match order.as_slice() {
        [] => return Err(Error::InvalidWalk("empty tour".into())),
        [only] => ClosedWalk::single(points[*only]),
        _ => {
            let mut vertices = vec![points[order[0]]];
            for (i, &from) in order.iter().enumerate() {
                let to = order[(i + 1) % order.len()];
                vertices.extend_from_slice(&closure.path(from, to)[1..]);
            }
            if vertices.len() == 1 {
                // Every tour point is the same vertex.
                ClosedWalk::single(vertices[0])
            } else {
                ClosedWalk::new(vertices)?
            }
        }
    };
    debug_assert_eq!(walk.length() as u64, tour.cost);
    Ok(walk)
}

pub fn solve_star_approx(inst: &Instance, backend: TspBackend) -> Result<SolveReport> {
    solve_star_approx_within(inst, backend, &Budget::default())
}

/// Star check, then cover `G[X]` with both endpoints of a maximal matching,
/// tour the cover in the shortest-path metric and stitch the tour into a
/// walk. Guarantee: three times the back-end's ratio.
pub fn solve_star_approx_within(
    inst: &Instance,
    backend: TspBackend,
    budget: &Budget,
) -> Result<SolveReport> {
    if let Some(center) = inst.star_center() {
        return Ok(SolveReport::star(center, Some(0)));
    }
    let sub = inst.customer_subgraph();
    let cover = vc_matching_approx(&sub.graph).map(|v| sub.parent_id(v));
    let closure = metric_closure(inst.graph(), cover.vertices())?;

    let (tour, algorithm, alpha) = match backend.solve_within(closure.metric(), budget) {
        Ok(tour) => (
            tour,
            AlgorithmTag::MatchingTsp(backend),
            backend.guarantee(),
        ),
        Err(Error::BudgetExceeded { .. }) if backend == TspBackend::Christofides => (
            tsp_double_tree(closure.metric()),
            AlgorithmTag::MatchingTspFallback,
            TspBackend::DoubleTree.guarantee(),
        ),
        Err(e) => return Err(e),
    };
    let walk = stitch_tour(&closure, &tour)?.canonical();
    debug_assert_eq!(verify_feasible(inst, &walk), Ok(()));
    Ok(SolveReport {
        walk,
        cover_used: Some(cover),
        tour_used: Some(tour),
        algorithm,
        guarantee_factor: Some(alpha * 3),
        lower_bound: None,
    })
}

pub fn solve_star_exact(inst: &Instance) -> Result<SolveReport> {
    solve_star_exact_within(inst, &Budget::default())
}

/// Optimal walk: the minimum over inclusion-minimal vertex covers `C` of
/// `G[X]` of the optimal tour of `C` under `d_G`.
///
/// The vertex set of any feasible walk contains some minimal cover, and
/// shortcutting the walk down to that cover cannot lengthen it, so minimal
/// covers are enough.
pub fn solve_star_exact_within(inst: &Instance, budget: &Budget) -> Result<SolveReport> {
    let sub = inst.customer_subgraph();
    let x = inst.customers().len();
    let gx_vertices = sub.graph.num_vertices();
    if x > budget.star_customers && gx_vertices > budget.star_cover_vertices {
        return Err(Error::BudgetExceeded {
            what: "exact STAR customer edges",
            size: x,
            limit: budget.star_customers,
        });
    }
    let covers = enumerate_minimal_covers_within(&sub.graph, budget)?;
    // One BFS per vertex of G[X]; each cover's metric is a sub-matrix.
    let all = metric_closure(inst.graph(), &sub.to_parent)?;

    let mut best: Option<(u64, VertexCover)> = None;
    for local_cover in covers {
        let idx = local_cover.vertices();
        let dist = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| all.metric().dist(i, j))
            .collect();
        let metric =
            Metric::from_flat_unchecked(idx.iter().map(|&i| sub.parent_id(i)).collect(), dist);
        let cost = tsp_exact_held_karp_within(&metric, budget)?.cost;
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, local_cover.map(|v| sub.parent_id(v))));
        }
    }
    let (opt, cover) = best.expect("G[X] has at least one minimal cover");
    let closure = metric_closure(inst.graph(), cover.vertices())?;
    let tour = tsp_exact_held_karp_within(closure.metric(), budget)?;
    debug_assert_eq!(tour.cost, opt);
    let walk = stitch_tour(&closure, &tour)?.canonical();
    Ok(SolveReport {
        walk,
        cover_used: Some(cover),
        tour_used: Some(tour),
        algorithm: AlgorithmTag::Exact,
        guarantee_factor: Some(Ratio::from_integer(1)),
        lower_bound: Some(opt),
    })
}

pub fn lower_bound_tau(inst: &Instance) -> Result<usize> {
    lower_bound_tau_within(inst, &Budget::default())
}

/// `tau(G[X])`, a lower bound on the optimum whenever `G[X]` is not a star.
pub fn lower_bound_tau_within(inst: &Instance, budget: &Budget) -> Result<usize> {
    if let Some(center) = inst.star_center() {
        return Err(Error::StarInstance(center));
    }
    Ok(vc_exact_within(&inst.customer_subgraph().graph, budget)?.len())
}
