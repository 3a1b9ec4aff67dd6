use super::tree::{euler_circuit, minimum_spanning_tree, shortcut};
use super::Tour;
use crate::metric::Metric;

/// Minimum spanning tree, every edge doubled, Euler circuit from point 0,
/// then shortcut. At most twice the optimal tour.
pub fn tsp_double_tree(metric: &Metric) -> Tour {
    let tree = minimum_spanning_tree(metric);
    let doubled: Vec<(usize, usize)> = tree.iter().flat_map(|&e| [e, e]).collect();
    let circuit = euler_circuit(metric.len(), &doubled, 0);
    Tour::from_order(metric, shortcut(metric, &circuit))
}
