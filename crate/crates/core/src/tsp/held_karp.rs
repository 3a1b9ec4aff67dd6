use super::Tour;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::metric::Metric;

pub fn tsp_exact_held_karp(metric: &Metric) -> Result<Tour> {
    tsp_exact_held_karp_within(metric, &Budget::default())
}

/// Optimal tour by dynamic programming over visited subsets. Among optimal
/// tours, returns the lexicographically smallest order starting at point 0.
pub fn tsp_exact_held_karp_within(metric: &Metric, budget: &Budget) -> Result<Tour> {
    let k = metric.len();
    let limit = budget.held_karp_points.min(24);
    if k > limit {
        return Err(Error::BudgetExceeded {
            what: "held-karp points",
            size: k,
            limit,
        });
    }
    if k <= 1 {
        return Ok(Tour::from_order(metric, (0..k).collect()));
    }
    // remaining[mask * k + last]: cheapest way to visit every point outside
    // `mask`, starting at `last`, and return to 0. `mask` always holds 0.
    let full = (1usize << k) - 1;
    let mut remaining = vec![u64::MAX; (1 << k) * k];
    for last in 0..k {
        remaining[full * k + last] = metric.dist(last, 0);
    }
    for mask in (1..full).rev().filter(|m| m & 1 == 1) {
        for last in (0..k).filter(|&l| mask & (1 << l) != 0) {
            let mut best = u64::MAX;
            for next in (0..k).filter(|&n| mask & (1 << n) == 0) {
                let rest = remaining[(mask | 1 << next) * k + next];
                best = best.min(metric.dist(last, next).saturating_add(rest));
            }
            remaining[mask * k + last] = best;
        }
    }
    let mut order = vec![0];
    let mut mask = 1usize;
    let mut cur = 0;
    while mask != full {
        let target = remaining[mask * k + cur];
        let next = (0..k)
            .filter(|&n| mask & (1 << n) == 0)
            .find(|&n| {
                metric
                    .dist(cur, n)
                    .saturating_add(remaining[(mask | 1 << n) * k + n])
                    == target
            })
            .expect("some successor attains the optimum");
        order.push(next);
        mask |= 1 << next;
        cur = next;
    }
    let tour = Tour::from_order(metric, order);
    debug_assert_eq!(tour.cost, remaining[k]);
    Ok(tour)
}
