#![allow(dead_code)]

use domkit::families::random_bipartite;
use domkit::{Graph, VertexSet};
use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn below(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    (rng.next_u64() % bound as u64) as usize
}

pub fn coin(rng: &mut ChaCha8Rng, p: f64) -> bool {
    ((rng.next_u64() >> 11) as f64) / ((1u64 << 53) as f64) < p
}

/// Erdős–Rényi G(n, p).
pub fn random_gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if coin(rng, p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Connected random bipartite graph on `n` vertices, resampling until
/// connected.
pub fn random_connected_bipartite(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let na = 1 + below(rng, n - 1);
        let g = random_bipartite(na, n - na, p, rng.next_u64()).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// A random dominating set: each vertex with probability `p`, then every
/// undominated vertex added in id order.
pub fn random_dominating_set(g: &Graph, p: f64, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut d: VertexSet = (0..g.n()).filter(|_| coin(rng, p)).collect();
    while let Some(v) = g.first_undominated(&d) {
        d.insert(v);
    }
    d
}

/// Naive domination check straight from the definition.
pub fn dominates(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| s.contains(v) || g.neighbors(v).iter().any(|&w| s.contains(w)))
}

pub fn independent(g: &Graph, s: &VertexSet) -> bool {
    g.edges().all(|(u, v)| !(s.contains(u) && s.contains(v)))
}
