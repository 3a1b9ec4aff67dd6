use crate::metric::Metric;

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Kruskal over the complete graph on the metric's points. Ties are broken
/// by the `(i, j)` index pair, so the tree is deterministic.
pub fn minimum_spanning_tree(metric: &Metric) -> Vec<(usize, usize)> {
    let k = metric.len();
    let mut candidates: Vec<(u64, usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| (metric.dist(i, j), i, j))
        .collect();
    candidates.sort_unstable();
    let mut sets = DisjointSets::new(k);
    let mut tree = Vec::with_capacity(k.saturating_sub(1));
    for (_, i, j) in candidates {
        if sets.union(i, j) {
            tree.push((i, j));
            if tree.len() + 1 == k {
                break;
            }
        }
    }
    tree
}

/// Hierholzer's algorithm on a connected multigraph whose degrees are all
/// even. Returns the closed circuit starting and ending at `start`;
/// neighbors are taken in ascending index order.
pub fn euler_circuit(num_points: usize, edges: &[(usize, usize)], start: usize) -> Vec<usize> {
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); num_points];
    for (id, &(a, b)) in edges.iter().enumerate() {
        incident[a].push((b, id));
        incident[b].push((a, id));
    }
    for list in &mut incident {
        // Popped from the back, so store in descending order.
        list.sort_unstable_by(|x, y| y.cmp(x));
    }
    let mut used = vec![false; edges.len()];
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        let mut advanced = false;
        while let Some((w, id)) = incident[v].pop() {
            if !used[id] {
                used[id] = true;
                stack.push(w);
                advanced = true;
                break;
            }
        }
        if !advanced {
            circuit.push(v);
            stack.pop();
        }
    }
    debug_assert!(used.iter().all(|&u| u), "multigraph is not connected");
    circuit.reverse();
    circuit
}

/// Keeps the first visit of every point. In a metric this never makes the
/// cycle longer.
pub fn shortcut(metric: &Metric, circuit: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; metric.len()];
    let order: Vec<usize> = circuit
        .iter()
        .copied()
        .filter(|&v| !std::mem::replace(&mut seen[v], true))
        .collect();
    debug_assert!(
        metric.cycle_cost(&order) <= walk_cost(metric, circuit),
        "shortcutting increased the cost"
    );
    order
}

fn walk_cost(metric: &Metric, circuit: &[usize]) -> u64 {
    circuit.windows(2).map(|w| metric.dist(w[0], w[1])).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circuit_uses_every_edge() {
        // Two triangles sharing vertex 0.
        let edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)];
        let c = euler_circuit(5, &edges, 0);
        assert_eq!(c, vec![0, 1, 2, 0, 3, 4, 0]);
    }

    #[test]
    fn doubled_edge_circuit() {
        let c = euler_circuit(2, &[(0, 1), (0, 1)], 0);
        assert_eq!(c, vec![0, 1, 0]);
        assert_eq!(euler_circuit(1, &[], 0), vec![0]);
    }

    #[test]
    fn mst_breaks_ties_by_index() {
        let m = Metric::new(
            (0..3).collect(),
            vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]],
        )
        .unwrap();
        assert_eq!(minimum_spanning_tree(&m), vec![(0, 1), (0, 2)]);
    }
}
