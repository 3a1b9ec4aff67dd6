use super::tree::{euler_circuit, minimum_spanning_tree, shortcut};
use super::Tour;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::metric::Metric;

pub fn tsp_christofides(metric: &Metric) -> Result<Tour> {
    tsp_christofides_within(metric, &Budget::default())
}

/// Spanning tree plus a minimum-weight perfect matching on its odd-degree
/// points, Euler circuit, shortcut. The matching is solved exactly by a
/// subset dynamic program, which bounds how many odd points are accepted.
pub fn tsp_christofides_within(metric: &Metric, budget: &Budget) -> Result<Tour> {
    let k = metric.len();
    let tree = minimum_spanning_tree(metric);
    let mut degree = vec![0usize; k];
    for &(a, b) in &tree {
        degree[a] += 1;
        degree[b] += 1;
    }
    let odd: Vec<usize> = (0..k).filter(|&v| degree[v] % 2 == 1).collect();
    if odd.len() > budget.matching_vertices {
        return Err(Error::BudgetExceeded {
            what: "christofides odd-degree vertices",
            size: odd.len(),
            limit: budget.matching_vertices,
        });
    }
    let mut multigraph = tree;
    multigraph.extend(min_weight_perfect_matching(metric, &odd));
    let circuit = euler_circuit(k, &multigraph, 0);
    Ok(Tour::from_order(metric, shortcut(metric, &circuit)))
}

/// Exact minimum-weight perfect matching over `points` (even count). The
/// lowest unmatched point is always paired first; ties go to the lowest
/// partner.
fn min_weight_perfect_matching(metric: &Metric, points: &[usize]) -> Vec<(usize, usize)> {
    let t = points.len();
    debug_assert!(t.is_multiple_of(2));
    if t == 0 {
        return Vec::new();
    }
    let full = (1usize << t) - 1;
    let mut best = vec![u64::MAX; 1 << t];
    let mut partner = vec![0u8; 1 << t];
    best[0] = 0;
    for mask in 1..=full {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = best[rest & !(1 << j)];
            if sub == u64::MAX {
                continue;
            }
            let cost = sub + metric.dist(points[i], points[j]);
            if cost < best[mask] {
                best[mask] = cost;
                partner[mask] = j as u8;
            }
        }
    }
    let mut pairs = Vec::with_capacity(t / 2);
    let mut mask = full;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        let j = partner[mask] as usize;
        pairs.push((points[i], points[j]));
        mask &= !(1 << i) & !(1 << j);
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_pairs_nearest_points() {
        let m = Metric::new(
            (0..4).collect(),
            vec![
                vec![0, 1, 2, 3],
                vec![1, 0, 1, 2],
                vec![2, 1, 0, 1],
                vec![3, 2, 1, 0],
            ],
        )
        .unwrap();
        assert_eq!(
            min_weight_perfect_matching(&m, &[0, 1, 2, 3]),
            vec![(0, 1), (2, 3)]
        );
        assert_eq!(min_weight_perfect_matching(&m, &[0, 3]), vec![(0, 3)]);
    }

    #[test]
    fn too_many_odd_vertices() {
        // A star metric: the spanning tree is a star with 21 odd leaves plus
        // an odd center.
        let k = 22;
        let matrix = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| match (i, j) {
                        _ if i == j => 0,
                        (0, _) | (_, 0) => 1,
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        let m = Metric::new((0..k).collect(), matrix).unwrap();
        assert!(matches!(
            tsp_christofides(&m),
            Err(Error::BudgetExceeded { size: 22, .. })
        ));
    }
}
