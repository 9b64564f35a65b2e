//! Hard instances for edge counting from `RandEdge` samples.
//!
//! All edges live on a small planted vertex set identified with the vertices
//! of a clique `H`. An injective map `f` sends elements of a universe of size
//! `n` to clique edges; graph A realizes the full universe, graph B the image
//! of the first `⌊n/2⌋ - 1` elements under a random bijection. Outside the
//! planted set every vertex is isolated, so local probes almost never see
//! anything, while `RandEdge` samples are uniform draws from the support.

use rand::prelude::*;

use super::{build_graph, Graph, GraphError, Vertex};
use crate::seed;

#[derive(Clone, Debug)]
pub struct LowerBoundInstance {
    /// `n` edges: the full universe.
    pub graph_a: Graph,
    /// `⌊n/2⌋ - 1` edges.
    pub graph_b: Graph,
    /// Planted vertices; entry `j` is the image of clique vertex `j`.
    pub planted_set: Vec<Vertex>,
    pub mapping_seed: u64,
}

impl LowerBoundInstance {
    pub fn is_planted(&self, v: Vertex) -> bool {
        self.planted_set.contains(&v)
    }
}

/// Exact `⌈√n⌉`.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while r * r < n {
        r += 1;
    }
    r
}

/// `2⌈√n⌉ + 1`.
pub fn planted_set_size(n: usize) -> usize {
    2 * ceil_sqrt(n) + 1
}

pub fn gen_lowerbound_instance(n: usize, seed: u64) -> Result<LowerBoundInstance, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "lower-bound instances need n >= 3, got {n}"
        )));
    }
    let k = planted_set_size(n);
    if k > n {
        return Err(GraphError::InvalidParameter(format!(
            "planted set of {k} vertices does not fit in n = {n}"
        )));
    }
    debug_assert!(k * (k - 1) / 2 >= n);

    let mut place_rng = seed::stream(seed, "lowerbound-placement", 0);
    let planted_set = rand::seq::index::sample(&mut place_rng, n, k).into_vec();

    // f: clique edges in lexicographic order, shuffled; f(x) = clique_edges[x].
    let mut clique_edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    clique_edges.shuffle(&mut seed::stream(seed, "lowerbound-f", 0));
    let f = |x: usize| {
        let (a, b) = clique_edges[x];
        (planted_set[a], planted_set[b])
    };

    let graph_a = build_graph(n, (0..n).map(f))?;

    let mut pi: Vec<usize> = (0..n).collect();
    pi.shuffle(&mut seed::stream(seed, "lowerbound-pi", 0));
    let support_b = n / 2 - 1;
    let graph_b = build_graph(n, pi[..support_b].iter().map(|&x| f(x)))?;

    Ok(LowerBoundInstance {
        graph_a,
        graph_b,
        planted_set,
        mapping_seed: seed,
    })
}
