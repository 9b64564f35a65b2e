use rand::distributions::WeightedIndex;
use rand::prelude::*;

use super::{build_graph, Edge, Graph, GraphError, Vertex};
use crate::seed;

/// Named benchmark families covering the sparse, dense and heavy-tailed regimes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Shape {
    Path,
    Star,
    /// A clique on vertices `0..k`; the remaining vertices are isolated.
    CliquePlusIsolated {
        k: usize,
    },
    /// Power-law degree sequence `P(d) ∝ d^-exponent` on `1..n`, wired by a
    /// configuration model that drops self-loops and repeated pairs.
    Skewed {
        exponent: f64,
    },
}

/// Number of unordered pairs on `n` vertices.
pub fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Maps a colex rank in `0..C(n,2)` to its vertex pair.
fn unrank_pair(k: u64) -> Edge {
    // v is the largest integer with v(v-1)/2 <= k.
    let mut v = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as u64;
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    let u = k - v * (v - 1) / 2;
    Edge {
        u: u as Vertex,
        v: v as Vertex,
    }
}

/// Uniform random graph with exactly `m` distinct edges.
pub fn gen_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let max = pair_count(n);
    if m as u64 > max {
        return Err(GraphError::TooManyEdges { m: m as u64, max });
    }
    let mut rng = seed::stream(seed, "gnm", 0);
    let picks = rand::seq::index::sample(&mut rng, max as usize, m);
    let edges = picks.into_iter().map(|k| unrank_pair(k as u64).endpoints());
    let g = build_graph(n, edges)?;
    debug_assert_eq!(g.m(), m);
    Ok(g)
}

pub fn gen_named(shape: Shape, n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "named generators need n >= 2, got {n}"
        )));
    }
    match shape {
        Shape::Path => build_graph(n, (0..n - 1).map(|i| (i, i + 1))),
        Shape::Star => build_graph(n, (1..n).map(|i| (0, i))),
        Shape::CliquePlusIsolated { k } => {
            if k > n {
                return Err(GraphError::InvalidParameter(format!(
                    "clique size {k} exceeds vertex count {n}"
                )));
            }
            build_graph(n, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))))
        }
        Shape::Skewed { exponent } => skewed(n, exponent, seed),
    }
}

fn skewed(n: usize, exponent: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(exponent.is_finite() && exponent > 1.0) {
        return Err(GraphError::InvalidParameter(format!(
            "skewed exponent must be finite and > 1, got {exponent}"
        )));
    }
    let mut rng = seed::stream(seed, "skewed", 0);
    // Degree support 1..=n-1.
    let weights: Vec<f64> = (1..n).map(|d| (d as f64).powf(-exponent)).collect();
    let dist =
        WeightedIndex::new(&weights).map_err(|e| GraphError::InvalidParameter(e.to_string()))?;
    let mut stubs: Vec<Vertex> = Vec::new();
    for v in 0..n {
        let d = dist.sample(&mut rng) + 1;
        stubs.extend(std::iter::repeat_n(v, d));
    }
    if stubs.len() % 2 == 1 {
        stubs.pop();
    }
    stubs.shuffle(&mut rng);
    let pairs = stubs
        .chunks_exact(2)
        .filter(|p| p[0] != p[1])
        .map(|p| (p[0], p[1]))
        .collect::<Vec<_>>();
    build_graph(n, pairs)
}
