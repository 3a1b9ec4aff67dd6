//! Vertex covers: the maximal-matching 2-approximation, an exact
//! branch-and-bound oracle, minimal-cover enumeration and the grid closed
//! forms.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// Sorted, duplicate-free vertex set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexCover(Vec<Vertex>);

impl VertexCover {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexCover(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn covers(&self, g: &Graph) -> bool {
        is_vertex_cover(g, &self.0)
    }

    /// Re-labels vertices, e.g. from `G[X]` ids back to `G` ids.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> VertexCover {
        VertexCover::new(self.0.iter().map(|&v| f(v)).collect())
    }
}

pub fn is_vertex_cover(g: &Graph, set: &[Vertex]) -> bool {
    let mut inside = vec![false; g.num_vertices()];
    for &v in set {
        if v < inside.len() {
            inside[v] = true;
        }
    }
    g.edges().iter().all(|e| inside[e.u] || inside[e.v])
}

/// Greedy maximal matching, scanning edges in ascending `(u, v)` order.
pub fn greedy_maximal_matching(g: &Graph) -> Vec<Edge> {
    let mut matched = vec![false; g.num_vertices()];
    let mut matching = Vec::new();
    for &e in g.edges() {
        if !matched[e.u] && !matched[e.v] {
            matched[e.u] = true;
            matched[e.v] = true;
            matching.push(e);
        }
    }
    matching
}

/// Both endpoints of every edge of a greedy maximal matching.
pub fn vc_matching_approx(g: &Graph) -> VertexCover {
    let vertices = greedy_maximal_matching(g)
        .into_iter()
        .flat_map(|e| [e.u, e.v])
        .collect();
    VertexCover::new(vertices)
}

pub fn vc_exact(g: &Graph) -> Result<VertexCover> {
    vc_exact_within(g, &Budget::default())
}

/// A minimum vertex cover; among minimum covers, the lexicographically
/// smallest sorted vertex list.
pub fn vc_exact_within(g: &Graph, budget: &Budget) -> Result<VertexCover> {
    let n = g.num_vertices();
    let limit = budget.vc_vertices.min(64);
    if n > limit {
        return Err(Error::BudgetExceeded {
            what: "exact vertex cover vertices",
            size: n,
            limit,
        });
    }
    let search = CoverSearch::new(g);
    let start = greedy_maximal_matching(g).len();
    for k in start..=n {
        if let Some(mask) = search.first_cover(k) {
            return Ok(VertexCover::new(mask_to_vec(mask)));
        }
    }
    unreachable!("the full vertex set is a cover")
}

fn mask_to_vec(mut mask: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

struct CoverSearch {
    n: usize,
    adj: Vec<u64>,
}

impl CoverSearch {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.num_vertices())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        CoverSearch {
            n: g.num_vertices(),
            adj,
        }
    }

    /// First cover of size at most `k` in include-before-exclude order over
    /// vertices `0..n`, which is the lexicographically smallest one.
    fn first_cover(&self, k: usize) -> Option<u64> {
        self.descend(0, 0, 0, k)
    }

    fn descend(&self, v: usize, inside: u64, outside: u64, k: usize) -> Option<u64> {
        let size = inside.count_ones() as usize;
        if size > k {
            return None;
        }
        if v == self.n {
            return Some(inside);
        }
        let bit = 1u64 << v;
        if inside & bit != 0 {
            return self.descend(v + 1, inside, outside, k);
        }
        if size + self.matching_bound(v, inside) > k {
            return None;
        }
        if let Some(found) = self.descend(v + 1, inside | bit, outside, k) {
            return Some(found);
        }
        // Leaving v out forces all of its neighbors in.
        if self.adj[v] & outside != 0 {
            return None;
        }
        self.descend(v + 1, inside | self.adj[v], outside | bit, k)
    }

    /// Size of a greedy matching among undecided vertices `>= from`: a lower
    /// bound on how many more vertices any completion needs.
    fn matching_bound(&self, from: usize, inside: u64) -> usize {
        let undecided_all = if from >= 64 { 0 } else { (!0u64) << from };
        let mut free = undecided_all & !inside & self.full_mask();
        let mut count = 0;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= !(1 << v);
            let partners = self.adj[v] & free;
            if partners != 0 {
                free &= !(1 << partners.trailing_zeros());
                count += 1;
            }
        }
        count
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        }
    }
}

pub fn enumerate_minimal_covers(g: &Graph) -> Result<Vec<VertexCover>> {
    enumerate_minimal_covers_within(g, &Budget::default())
}

/// All inclusion-minimal vertex covers, ordered by size and then
/// lexicographically. Isolated vertices never appear.
pub fn enumerate_minimal_covers_within(g: &Graph, budget: &Budget) -> Result<Vec<VertexCover>> {
    let active: Vec<Vertex> = (0..g.num_vertices()).filter(|&v| g.degree(v) > 0).collect();
    if g.num_edges() > budget.cover_edges && active.len() > budget.cover_vertices {
        return Err(Error::BudgetExceeded {
            what: "minimal cover enumeration edges",
            size: g.num_edges(),
            limit: budget.cover_edges,
        });
    }
    if active.len() > 64 {
        return Err(Error::BudgetExceeded {
            what: "minimal cover enumeration vertices",
            size: active.len(),
            limit: 64,
        });
    }
    let local = |v: Vertex| active.binary_search(&v).expect("non-isolated");
    let adj: Vec<u64> = active
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |m, &w| m | (1 << local(w)))
        })
        .collect();

    let mut found = Vec::new();
    collect_minimal(&adj, 0, 0, 0, &mut found);
    let mut covers: Vec<VertexCover> = found
        .into_iter()
        .map(|mask| VertexCover::new(mask_to_vec(mask).into_iter().map(|i| active[i]).collect()))
        .collect();
    covers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    covers.dedup();
    Ok(covers)
}

fn collect_minimal(adj: &[u64], v: usize, inside: u64, outside: u64, out: &mut Vec<u64>) {
    if v == adj.len() {
        let minimal = mask_to_vec(inside)
            .into_iter()
            .all(|w| adj[w] & !inside != 0);
        if minimal {
            out.push(inside);
        }
        return;
    }
    let bit = 1u64 << v;
    if inside & bit != 0 {
        collect_minimal(adj, v + 1, inside, outside, out);
        return;
    }
    collect_minimal(adj, v + 1, inside | bit, outside, out);
    if adj[v] & outside == 0 {
        collect_minimal(adj, v + 1, inside | adj[v], outside | bit, out);
    }
}

/// Minimum vertex cover size of the `rows x cols` grid.
pub fn grid_tau(rows: usize, cols: usize) -> usize {
    rows * cols / 2
}

/// A matching of the `rows x cols` grid with `grid_tau(rows, cols)` edges:
/// every other horizontal edge of each row, plus every other vertical edge of
/// the last column when `cols` is odd.
pub fn grid_max_matching_construction(rows: usize, cols: usize) -> Vec<Edge> {
    let id = |r: usize, c: usize| r * cols + c;
    let mut matching = Vec::with_capacity(grid_tau(rows, cols));
    for r in 0..rows {
        for c in (0..cols.saturating_sub(1)).step_by(2) {
            matching.push(Edge::new(id(r, c), id(r, c + 1)));
        }
    }
    if cols % 2 == 1 {
        let last = cols - 1;
        for r in (0..rows.saturating_sub(1)).step_by(2) {
            matching.push(Edge::new(id(r, last), id(r + 1, last)));
        }
    }
    matching.sort_unstable();
    matching
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Independent oracle: all subsets in (size, lexicographic) order.
    fn brute_force_min_cover(g: &Graph) -> Vec<Vertex> {
        let n = g.num_vertices();
        let mut subsets: Vec<Vec<Vertex>> = (0u32..1 << n)
            .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
            .collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        subsets.into_iter().find(|s| is_vertex_cover(g, s)).unwrap()
    }

    fn brute_force_minimal(g: &Graph) -> Vec<Vec<Vertex>> {
        let n = g.num_vertices();
        let mut out: Vec<Vec<Vertex>> = (0u32..1 << n)
            .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect::<Vec<_>>())
            .filter(|s| is_vertex_cover(g, s))
            .filter(|s| {
                (0..s.len()).all(|i| {
                    let mut t = s.clone();
                    t.remove(i);
                    !is_vertex_cover(g, &t)
                })
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if bits[k] {
                            edges.push((a, b));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    #[test]
    fn matching_approx_examples() {
        let p4 = path(4);
        assert_eq!(
            greedy_maximal_matching(&p4),
            vec![Edge::new(0, 1), Edge::new(2, 3)]
        );
        assert_eq!(vc_matching_approx(&p4).vertices(), &[0, 1, 2, 3]);
        let triangle = Graph::complete(3).unwrap();
        assert_eq!(vc_matching_approx(&triangle).vertices(), &[0, 1]);
        let empty = Graph::new(3, Vec::<(usize, usize)>::new()).unwrap();
        assert!(vc_matching_approx(&empty).is_empty());
    }

    #[test]
    fn exact_examples() {
        // {0,2}, {1,2} and {1,3} are all minimum; the smallest set wins.
        assert_eq!(vc_exact(&path(4)).unwrap().vertices(), &[0, 2]);
        assert!(VertexCover::new(vec![1, 2]).covers(&path(4)));
        assert_eq!(
            vc_exact(&Graph::grid(2, 2).unwrap()).unwrap().vertices(),
            &[0, 3]
        );
        assert_eq!(vc_exact(&path(2)).unwrap().vertices(), &[0]);
        assert_eq!(
            vc_exact(&Graph::complete(3).unwrap()).unwrap().vertices(),
            &[0, 1]
        );
    }

    #[test]
    fn exact_respects_budget() {
        let g = Graph::grid(5, 5).unwrap();
        assert!(matches!(vc_exact(&g), Err(Error::BudgetExceeded { .. })));
        let roomy = Budget {
            vc_vertices: 25,
            ..Budget::default()
        };
        assert_eq!(vc_exact_within(&g, &roomy).unwrap().len(), 12);
    }

    #[test]
    fn exact_matches_grid_tau_up_to_six() {
        let roomy = Budget {
            vc_vertices: 36,
            ..Budget::default()
        };
        for n in 1..=6 {
            for m in 1..=6 {
                let g = Graph::grid(n, m).unwrap();
                let c = vc_exact_within(&g, &roomy).unwrap();
                assert!(c.covers(&g));
                assert_eq!(c.len(), grid_tau(n, m), "{n}x{m}");
            }
        }
    }

    #[test]
    fn minimal_cover_examples() {
        let sets = |g: &Graph| -> Vec<Vec<Vertex>> {
            enumerate_minimal_covers(g)
                .unwrap()
                .into_iter()
                .map(|c| c.vertices().to_vec())
                .collect()
        };
        assert_eq!(sets(&path(2)), vec![vec![0], vec![1]]);
        assert_eq!(sets(&path(3)), vec![vec![1], vec![0, 2]]);
        assert_eq!(
            sets(&Graph::complete(3).unwrap()),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        // Isolated vertices are ignored.
        let g = Graph::new(5, [(1, 3)]).unwrap();
        assert_eq!(sets(&g), vec![vec![1], vec![3]]);
    }

    #[test]
    fn minimal_cover_budget() {
        let g = Graph::complete(7).unwrap();
        assert_eq!(enumerate_minimal_covers(&g).unwrap().len(), 7);
        let big = Graph::grid(5, 5).unwrap();
        assert!(matches!(
            enumerate_minimal_covers(&big),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn grid_tau_values() {
        assert_eq!(grid_tau(2, 2), 2);
        assert_eq!(grid_tau(1, 1), 0);
        assert_eq!(grid_tau(3, 3), 4);
    }

    #[test]
    fn grid_matching_examples() {
        assert_eq!(grid_max_matching_construction(1, 2), vec![Edge::new(0, 1)]);
        assert_eq!(grid_max_matching_construction(2, 2).len(), 2);
        assert_eq!(grid_max_matching_construction(3, 3).len(), 4);
    }

    #[test]
    fn grid_matching_is_maximum_up_to_twenty() {
        for n in 1..=20 {
            for m in 1..=20 {
                let g = Graph::grid(n, m).unwrap();
                let matching = grid_max_matching_construction(n, m);
                let mut used = vec![false; n * m];
                for e in &matching {
                    assert!(g.contains_edge(*e));
                    assert!(!used[e.u] && !used[e.v], "{n}x{m}: {e} overlaps");
                    used[e.u] = true;
                    used[e.v] = true;
                }
                assert_eq!(matching.len(), grid_tau(n, m), "{n}x{m}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(600))]

        #[test]
        fn approx_within_twice_exact(g in arb_graph(12)) {
            let approx = vc_matching_approx(&g);
            let exact = vc_exact(&g).unwrap();
            prop_assert!(approx.covers(&g));
            prop_assert_eq!(approx.len() % 2, 0);
            prop_assert!(approx.len() <= 2 * exact.len());
        }

        #[test]
        fn exact_agrees_with_brute_force(g in arb_graph(10)) {
            let exact = vc_exact(&g).unwrap();
            let brute = brute_force_min_cover(&g);
            prop_assert_eq!(exact.vertices(), brute.as_slice());
        }

        #[test]
        fn deleting_an_edge_drops_tau_by_at_most_one(g in arb_graph(12)) {
            let tau = vc_exact(&g).unwrap().len();
            for &e in g.edges() {
                let smaller = vc_exact(&g.without_edge(e)).unwrap().len();
                prop_assert!(tau <= smaller + 1);
            }
        }

        #[test]
        fn minimal_covers_match_brute_force(g in arb_graph(8)) {
            prop_assume!(g.num_edges() <= 12);
            let covers = enumerate_minimal_covers(&g).unwrap();
            let got: Vec<Vec<Vertex>> = covers.iter().map(|c| c.vertices().to_vec()).collect();
            prop_assert_eq!(got, brute_force_minimal(&g));
            for c in &covers {
                prop_assert!(c.covers(&g));
                for i in 0..c.len() {
                    let mut t = c.vertices().to_vec();
                    t.remove(i);
                    prop_assert!(!is_vertex_cover(&g, &t));
                }
            }
        }
    }
}
