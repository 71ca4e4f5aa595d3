//! Seeded random graph families. Every sampler is a pure function of its
//! arguments.

use bchrom_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
///
/// # Panics
/// If `p` is outside `[0, 1]`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("edges in range")
}

/// Random bipartite graph with sides `0..n1` and `n1..n1+n2`.
pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n1 {
        for v in 0..n2 {
            if rng.gen_bool(p) {
                edges.push((u, n1 + v));
            }
        }
    }
    Graph::from_edges(n1 + n2, edges).expect("edges in range")
}

/// Complement of [`random_bipartite`]: two cliques with random cross edges.
pub fn random_cobipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Graph {
    random_bipartite(n1, n2, p, seed).complement()
}

/// Uniform random recursive tree: vertex `i` attaches to a random earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, rng.gen_range(0..i))).collect();
    Graph::from_edges(n, edges).expect("edges in range")
}

/// Rejection-sample `G(n, p)` until it has no induced `K_{1,t}`. Tries seeds
/// `seed, seed+1, ...` up to `attempts` times.
pub fn random_k1t_free(n: usize, p: f64, t: usize, seed: u64, attempts: u64) -> Option<Graph> {
    (0..attempts).map(|i| random_graph(n, p, seed.wrapping_add(i))).find(|g| g.is_k1t_free(t))
}
