//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GraphParams {
    Grid {
        rows: usize,
        cols: usize,
    },
    /// A random spanning tree plus every other pair with probability
    /// `edge_prob`.
    General {
        vertices: usize,
        edge_prob: f64,
    },
}

/// Everything needed to regenerate one instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub params: GraphParams,
    /// Probability that an edge is a customer.
    pub density: f64,
}

impl ExperimentConfig {
    pub fn grid(rows: usize, cols: usize, density: f64, seed: u64) -> Self {
        ExperimentConfig {
            seed,
            params: GraphParams::Grid { rows, cols },
            density,
        }
    }

    pub fn general(vertices: usize, edge_prob: f64, density: f64, seed: u64) -> Self {
        ExperimentConfig {
            seed,
            params: GraphParams::General {
                vertices,
                edge_prob,
            },
            density,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(Error::InvalidParams(format!(
                "density must be in (0, 1], got {}",
                self.density
            )));
        }
        match self.params {
            GraphParams::Grid { rows, cols } => {
                if rows == 0 || cols == 0 || rows * cols < 2 {
                    return Err(Error::InvalidParams(format!(
                        "a {rows}x{cols} grid has no edges"
                    )));
                }
            }
            GraphParams::General {
                vertices,
                edge_prob,
            } => {
                if vertices < 2 {
                    return Err(Error::InvalidParams("need at least 2 vertices".into()));
                }
                if !(0.0..=1.0).contains(&edge_prob) {
                    return Err(Error::InvalidParams(format!(
                        "edge probability must be in [0, 1], got {edge_prob}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Same config, same instance.
    pub fn generate(&self) -> Result<Instance> {
        self.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let graph = match self.params {
            GraphParams::Grid { rows, cols } => Graph::grid(rows, cols)?,
            GraphParams::General {
                vertices,
                edge_prob,
            } => random_connected_graph(vertices, edge_prob, &mut rng)?,
        };
        let customers = sample_customers(&graph, self.density, &mut rng);
        Instance::new(graph, customers)
    }
}

fn random_connected_graph(n: usize, edge_prob: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    // parent[v] < v, so (a, b) with a < b is a tree edge exactly when parent[b] == a.
    let parent: Vec<usize> = (0..n)
        .map(|v| if v == 0 { 0 } else { rng.random_range(0..v) })
        .collect();
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parent[v], v)).collect();
    for a in 0..n {
        for (b, &pb) in parent.iter().enumerate().skip(a + 1) {
            if pb != a && rng.random_bool(edge_prob) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges)
}

/// Each edge independently, in sorted order; redrawn until non-empty.
fn sample_customers(g: &Graph, density: f64, rng: &mut ChaCha8Rng) -> Vec<Edge> {
    loop {
        let picked: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|_| rng.random_bool(density))
            .collect();
        if !picked.is_empty() {
            return picked;
        }
    }
}
