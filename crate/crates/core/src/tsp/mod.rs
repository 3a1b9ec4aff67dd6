//! Metric TSP back-ends: double tree, Christofides and exact Held-Karp.

mod christofides;
mod double_tree;
mod held_karp;
mod tree;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::metric::Metric;

pub use christofides::{tsp_christofides, tsp_christofides_within};
pub use double_tree::tsp_double_tree;
pub use held_karp::{tsp_exact_held_karp, tsp_exact_held_karp_within};
pub use tree::{euler_circuit, minimum_spanning_tree, shortcut};

/// A cyclic order over all points of a metric, by point index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tour {
    pub order: Vec<usize>,
    pub cost: u64,
}

impl Tour {
    pub fn from_order(metric: &Metric, order: Vec<usize>) -> Self {
        let cost = metric.cycle_cost(&order);
        Tour { order, cost }
    }

    /// True when `order` is a permutation of the metric's points and `cost`
    /// matches a recomputation.
    pub fn is_consistent(&self, metric: &Metric) -> bool {
        let mut seen = vec![false; metric.len()];
        for &i in &self.order {
            if i >= seen.len() || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        seen.iter().all(|&s| s) && metric.cycle_cost(&self.order) == self.cost
    }
}

/// A metric TSP solver usable by the STAR pipeline.
pub trait TspAlgorithm {
    fn name(&self) -> &'static str;

    /// Worst-case ratio to the optimal tour.
    fn guarantee(&self) -> Ratio<u64>;

    fn solve(&self, metric: &Metric) -> Result<Tour>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TspBackend {
    DoubleTree,
    Christofides,
    Exact,
}

impl TspBackend {
    pub const ALL: [TspBackend; 3] = [
        TspBackend::DoubleTree,
        TspBackend::Christofides,
        TspBackend::Exact,
    ];

    pub fn solve_within(&self, metric: &Metric, budget: &Budget) -> Result<Tour> {
        match self {
            TspBackend::DoubleTree => Ok(tsp_double_tree(metric)),
            TspBackend::Christofides => tsp_christofides_within(metric, budget),
            TspBackend::Exact => tsp_exact_held_karp_within(metric, budget),
        }
    }
}

impl TspAlgorithm for TspBackend {
    fn name(&self) -> &'static str {
        match self {
            TspBackend::DoubleTree => "double-tree",
            TspBackend::Christofides => "christofides",
            TspBackend::Exact => "exact",
        }
    }

    fn guarantee(&self) -> Ratio<u64> {
        match self {
            TspBackend::DoubleTree => Ratio::from_integer(2),
            TspBackend::Christofides => Ratio::new(3, 2),
            TspBackend::Exact => Ratio::from_integer(1),
        }
    }

    fn solve(&self, metric: &Metric) -> Result<Tour> {
        self.solve_within(metric, &Budget::default())
    }
}

impl fmt::Display for TspBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TspBackend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "double-tree" => Ok(TspBackend::DoubleTree),
            "christofides" => Ok(TspBackend::Christofides),
            "exact" => Ok(TspBackend::Exact),
            other => Err(Error::Parse(format!("unknown TSP back-end `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::metric::metric_closure;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn uniform(k: usize, d: u64) -> Metric {
        let matrix = (0..k)
            .map(|i| (0..k).map(|j| if i == j { 0 } else { d }).collect())
            .collect();
        Metric::new((0..k).collect(), matrix).unwrap()
    }

    fn line(k: usize) -> Metric {
        let matrix = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| (i as i64 - j as i64).unsigned_abs())
                    .collect()
            })
            .collect();
        Metric::new((0..k).collect(), matrix).unwrap()
    }

    /// Oracle: minimum over all permutations fixing point 0.
    fn brute_force(metric: &Metric) -> u64 {
        let k = metric.len();
        if k == 1 {
            return 0;
        }
        (1..k)
            .permutations(k - 1)
            .map(|rest| {
                let mut order = vec![0];
                order.extend(rest);
                metric.cycle_cost(&order)
            })
            .min()
            .unwrap()
    }

    fn random_metric() -> impl Strategy<Value = Metric> {
        (2usize..=12, 0.15f64..0.9, 1usize..=9, any::<u64>()).prop_map(|(n, p, k, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges: Vec<(usize, usize)> =
                (1..n).map(|v| (rng.random_range(0..v), v)).collect();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.random_bool(p) && !edges.contains(&(a, b)) {
                        edges.push((a, b));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            let points: Vec<usize> = (0..k).map(|_| rng.random_range(0..n)).unique().collect();
            metric_closure(&g, &points).unwrap().metric().clone()
        })
    }

    #[test]
    fn trivial_metrics() {
        for backend in TspBackend::ALL {
            let t = backend.solve(&uniform(3, 1)).unwrap();
            assert_eq!(t.cost, 3, "{backend}");
            let t = backend.solve(&uniform(1, 1)).unwrap();
            assert_eq!((t.order.clone(), t.cost), (vec![0], 0), "{backend}");
            let t = backend.solve(&uniform(2, 2)).unwrap();
            assert_eq!(t.cost, 4, "{backend}");
        }
    }

    #[test]
    fn line_metric() {
        let m = line(4);
        assert_eq!(brute_force(&m), 6);
        assert_eq!(tsp_exact_held_karp(&m).unwrap().cost, 6);
        assert!(tsp_double_tree(&m).cost <= 12);
        assert!(tsp_christofides(&m).unwrap().cost <= 9);
    }

    #[test]
    fn held_karp_examples() {
        let m = Metric::new(vec![0, 1], vec![vec![0, 5], vec![5, 0]]).unwrap();
        assert_eq!(tsp_exact_held_karp(&m).unwrap().cost, 10);
        let m = Metric::new(
            vec![0, 1, 2],
            vec![vec![0, 2, 3], vec![2, 0, 4], vec![3, 4, 0]],
        )
        .unwrap();
        let t = tsp_exact_held_karp(&m).unwrap();
        assert_eq!(t.cost, 9);
        assert_eq!(t.order, vec![0, 1, 2]);
    }

    #[test]
    fn held_karp_budget() {
        assert!(matches!(
            tsp_exact_held_karp(&uniform(17, 1)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn backend_names_round_trip() {
        for backend in TspBackend::ALL {
            assert_eq!(backend.name().parse::<TspBackend>().unwrap(), backend);
        }
        assert!("lkh".parse::<TspBackend>().is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn approximation_ratios_hold(m in random_metric()) {
            let exact = tsp_exact_held_karp(&m).unwrap();
            let dt = tsp_double_tree(&m);
            let ch = tsp_christofides(&m).unwrap();
            for t in [&exact, &dt, &ch] {
                prop_assert!(t.is_consistent(&m));
                prop_assert!(exact.cost <= t.cost);
            }
            prop_assert!(dt.cost <= 2 * exact.cost);
            prop_assert!(2 * ch.cost <= 3 * exact.cost);
        }

        #[test]
        fn held_karp_matches_enumeration(m in random_metric()) {
            prop_assume!(m.len() <= 7);
            prop_assert_eq!(tsp_exact_held_karp(&m).unwrap().cost, brute_force(&m));
        }

        #[test]
        fn held_karp_order_is_lexicographically_first(m in random_metric()) {
            prop_assume!(m.len() <= 6);
            let best = brute_force(&m);
            let k = m.len();
            let first = (1..k)
                .permutations(k - 1)
                .map(|rest| std::iter::once(0).chain(rest).collect::<Vec<_>>())
                .find(|o| m.cycle_cost(o) == best)
                .unwrap_or_else(|| vec![0]);
            prop_assert_eq!(tsp_exact_held_karp(&m).unwrap().order, first);
        }
    }
}
