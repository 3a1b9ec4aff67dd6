//! Oracles and fixtures shared by the integration tests. Nothing here calls
//! the solvers under test.

#![allow(dead_code)]

use std::collections::VecDeque;

use star_routing::{ExperimentConfig, Graph, Instance};

/// Minimum vertex cover size by trying every subset.
pub fn brute_force_tau(g: &Graph) -> usize {
    let n = g.num_vertices();
    assert!(n <= 20, "brute force over {n} vertices");
    (0u32..1 << n)
        .filter(|&mask| {
            g.edges()
                .iter()
                .all(|e| mask >> e.u & 1 == 1 || mask >> e.v & 1 == 1)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Optimal STAR length by breadth-first search over (vertex, customers
/// covered so far). Any feasible walk passes an endpoint of the first
/// customer edge, so it suffices to start there.
pub fn opt_by_state_search(inst: &Instance) -> usize {
    let g = inst.graph();
    let x = inst.customers();
    assert!(x.len() <= 16, "state search over {} customers", x.len());
    let full: u32 = (1 << x.len()) - 1;
    let touched: Vec<u32> = (0..g.num_vertices())
        .map(|v| {
            x.iter()
                .enumerate()
                .filter(|(_, e)| e.touches(v))
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let states = 1usize << x.len();
    let mut best = usize::MAX;
    for s in [x[0].u, x[0].v] {
        if touched[s] == full {
            return 0;
        }
        let mut dist = vec![usize::MAX; g.num_vertices() * states];
        let mut queue = VecDeque::new();
        dist[s * states + touched[s] as usize] = 0;
        queue.push_back((s, touched[s]));
        'search: while let Some((v, mask)) = queue.pop_front() {
            let d = dist[v * states + mask as usize];
            for &w in g.neighbors(v) {
                let next = mask | touched[w];
                if w == s && next == full {
                    best = best.min(d + 1);
                    break 'search;
                }
                let slot = &mut dist[w * states + next as usize];
                if *slot == usize::MAX {
                    *slot = d + 1;
                    queue.push_back((w, next));
                }
            }
        }
    }
    best
}

/// 1000 seeded instances: half grids up to 8x8, half connected graphs on
/// up to 12 vertices, customer densities cycling through 0.1, 0.5, 0.9, 1.0.
pub fn corpus() -> Vec<(String, Instance)> {
    const DENSITIES: [f64; 4] = [0.1, 0.5, 0.9, 1.0];
    const EDGE_PROBS: [f64; 3] = [0.1, 0.3, 0.6];
    (0..1000u64)
        .map(|i| {
            let density = DENSITIES[(i % 4) as usize];
            let (name, cfg) = if i % 2 == 0 {
                let k = i / 2;
                let rows = 1 + (k % 8) as usize;
                let cols = 1 + (k / 8 % 8) as usize;
                let cols = if rows * cols < 2 { 2 } else { cols };
                (
                    format!("grid-{i:04}-{rows}x{cols}"),
                    ExperimentConfig::grid(rows, cols, density, i),
                )
            } else {
                let k = i / 2;
                let vertices = 2 + (k % 11) as usize;
                let p = EDGE_PROBS[(k / 11 % 3) as usize];
                (
                    format!("general-{i:04}-{vertices}"),
                    ExperimentConfig::general(vertices, p, density, i),
                )
            };
            (name, cfg.generate().expect("corpus parameters are valid"))
        })
        .collect()
}
