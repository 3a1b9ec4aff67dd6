//! A closed walk that covers every edge of a grid, for instances where
//! nearly all edges are customers.
//!
//! Rows are grouped into two-row stripes, walked alternately left-to-right
//! and right-to-left. Inside a stripe the walk follows a square wave: at
//! every even offset from the stripe's entry border it switches rows, and it
//! always advances one column at a time. Between stripes it steps two rows
//! down in the border column. An odd last row is walked straight, and a
//! shortest path closes the cycle at the upper-left corner.
//!
//! Along a row of a stripe the skipped vertices sit four columns apart, the
//! two rows never skip the same column, and the phase of the next stripe
//! never lines up with the previous one, so every edge keeps an endpoint on
//! the walk. The exhaustive tests check this for all grids up to 50x50.

use num_rational::Ratio;

use crate::cover::grid_tau;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind, Vertex};
use crate::instance::{ClosedWalk, Instance};
use crate::solver::{AlgorithmTag, SolveReport};

/// Stripe layout of a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StripePlan {
    pub rows: usize,
    pub cols: usize,
    pub stripe_count: usize,
    pub has_single_row_tail: bool,
}

impl StripePlan {
    pub fn new(rows: usize, cols: usize) -> Self {
        StripePlan {
            rows,
            cols,
            stripe_count: rows.div_ceil(2),
            has_single_row_tail: rows % 2 == 1,
        }
    }

    /// Rows of stripe `i` (0-based). The tail stripe has one row.
    pub fn stripe_rows(&self, i: usize) -> std::ops::Range<usize> {
        2 * i..(2 * i + 2).min(self.rows)
    }

    pub fn two_row_stripes(&self) -> usize {
        self.rows / 2
    }
}

struct Cursor {
    cols: usize,
    row: usize,
    col: usize,
    trail: Vec<Vertex>,
}

impl Cursor {
    fn id(&self) -> Vertex {
        self.row * self.cols + self.col
    }

    fn to(&mut self, row: usize, col: usize) {
        debug_assert_eq!(self.row.abs_diff(row) + self.col.abs_diff(col), 1);
        self.row = row;
        self.col = col;
        let id = self.id();
        self.trail.push(id);
    }
}

/// The stripe walk on an `rows x cols` grid. Covers every grid edge.
pub fn space_filling_cycle(rows: usize, cols: usize) -> ClosedWalk {
    assert!(rows >= 1 && cols >= 1, "grid must be non-empty");
    if rows == 1 || cols == 1 {
        let len = rows.max(cols);
        let cycle: Vec<Vertex> = (0..len).chain((1..len.saturating_sub(1)).rev()).collect();
        return ClosedWalk::from_cycle(&cycle).expect("non-empty");
    }

    let plan = StripePlan::new(rows, cols);
    let mut cur = Cursor {
        cols,
        row: 0,
        col: 0,
        trail: vec![0],
    };
    let stripes = plan.two_row_stripes();
    for s in 0..stripes {
        let (top, bottom) = (2 * s, 2 * s + 1);
        let rightward = s % 2 == 0;
        for x in 0..cols {
            if x % 2 == 0 {
                let other = if cur.row == top { bottom } else { top };
                cur.to(other, cur.col);
            }
            if x + 1 < cols {
                let next = if rightward { cur.col + 1 } else { cur.col - 1 };
                cur.to(cur.row, next);
            }
        }
        let target = if s + 1 < stripes {
            cur.row + 2
        } else if plan.has_single_row_tail {
            rows - 1
        } else {
            cur.row
        };
        while cur.row < target {
            cur.to(cur.row + 1, cur.col);
        }
    }
    if plan.has_single_row_tail {
        let leftward = cur.col == cols - 1;
        for _ in 1..cols {
            let next = if leftward { cur.col - 1 } else { cur.col + 1 };
            cur.to(cur.row, next);
        }
    }

    let grid = Graph::grid(rows, cols).expect("non-empty grid");
    let back = grid.shortest_path(cur.id(), 0).expect("grid is connected");
    let mut vertices = cur.trail;
    vertices.extend_from_slice(&back[1..]);
    ClosedWalk::new(vertices).expect("walk returns to the corner")
}

/// The closed-form length bound of the stripe walk:
/// `floor(n/2)(m - 1 + ceil(m/2)) + 2(floor(n/2) - 1) + [n odd](m + 1) + (n + m - 2)`.
pub fn space_filling_length_bound(rows: usize, cols: usize) -> usize {
    let (n, m) = (rows as i64, cols as i64);
    let half = n / 2;
    let tail = if n % 2 == 1 { m + 1 } else { 0 };
    let bound = half * (m - 1 + (m + 1) / 2) + 2 * (half - 1) + tail + (n + m - 2);
    bound.max(0) as usize
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseGuarantee {
    pub length: usize,
    pub tau: usize,
    pub non_customers: usize,
    /// `length / tau(grid)`; `None` for an edgeless grid.
    pub ratio_to_tau: Option<Ratio<u64>>,
    /// `length / (tau - |X̄|)`: an upper bound on the ratio to the optimum
    /// when `G[X]` is not a star. `None` when `tau <= |X̄|`.
    pub ratio_to_lower_bound: Option<Ratio<u64>>,
    /// Whether `length <= (3/2) tau + 2n + 2m - 9/4`.
    pub chain_bound_holds: bool,
}

pub fn dense_guarantee_check(rows: usize, cols: usize, non_customers: usize) -> DenseGuarantee {
    let length = space_filling_cycle(rows, cols).length();
    let tau = grid_tau(rows, cols);
    let ratio = |den: usize| (den > 0).then(|| Ratio::new(length as u64, den as u64));
    // Scaled by 4 to stay in integers.
    let chain_bound_holds = (4 * length) as i64 <= (6 * tau + 8 * rows + 8 * cols) as i64 - 9;
    DenseGuarantee {
        length,
        tau,
        non_customers,
        ratio_to_tau: ratio(tau),
        ratio_to_lower_bound: ratio(tau.saturating_sub(non_customers)),
        chain_bound_holds,
    }
}

/// Runs the stripe walk on a grid instance, ignoring which edges are
/// customers.
pub fn solve_dense_grid(inst: &Instance) -> Result<SolveReport> {
    let GraphKind::Grid { rows, cols } = inst.graph().kind() else {
        return Err(Error::NotAGrid);
    };
    let walk = space_filling_cycle(rows, cols).canonical();
    let tau = grid_tau(rows, cols);
    let non_customers = inst.non_customer_count();
    let (lower_bound, guarantee_factor) = if inst.star_center().is_some() {
        (Some(0), None)
    } else {
        let lb = tau.saturating_sub(non_customers);
        let ratio = (lb > 0).then(|| Ratio::new(walk.length() as u64, lb as u64));
        (Some(lb as u64), ratio)
    };
    Ok(SolveReport {
        walk,
        cover_used: None,
        tour_used: None,
        algorithm: AlgorithmTag::DenseGrid,
        guarantee_factor,
        lower_bound,
    })
}
