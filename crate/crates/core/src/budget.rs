//! Size limits for the exponential-time oracles.

/// Environment variable that overrides the vertex-count limits.
pub const BUDGET_ENV: &str = "STAR_BUDGET_VERTICES";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Vertices accepted by the exact vertex cover search.
    pub vc_vertices: usize,
    /// Minimal-cover enumeration runs when the graph has at most this many
    /// edges...
    pub cover_edges: usize,
    /// ...or at most this many non-isolated vertices.
    pub cover_vertices: usize,
    /// Points accepted by Held-Karp.
    pub held_karp_points: usize,
    /// Odd-degree vertices accepted by the exact matching inside Christofides.
    pub matching_vertices: usize,
    /// The exact STAR oracle runs when `|X|` is at most this...
    pub star_customers: usize,
    /// ...or `G[X]` has at most this many vertices.
    pub star_cover_vertices: usize,
    /// Points accepted by the brute-force rectilinear TSP.
    pub rect_points: usize,
    /// Grid vertices the rectilinear-TSP reduction may allocate.
    pub reduction_vertices: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            vc_vertices: 24,
            cover_edges: 12,
            cover_vertices: 16,
            held_karp_points: 16,
            matching_vertices: 20,
            star_customers: 8,
            star_cover_vertices: 10,
            rect_points: 9,
            reduction_vertices: 4_000_000,
        }
    }
}

impl Budget {
    /// Defaults, with `STAR_BUDGET_VERTICES` (if set and numeric) replacing
    /// the exact vertex cover limit and the exact STAR `G[X]` vertex limit.
    pub fn from_env() -> Self {
        let mut budget = Budget::default();
        if let Some(n) = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            budget.vc_vertices = n;
            budget.star_cover_vertices = n;
        }
        budget
    }
}
