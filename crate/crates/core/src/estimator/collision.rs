//! Birthday-paradox statistics over `RandEdge` samples.

use std::collections::HashMap;

use super::EstimateError;
use crate::graph::Edge;

/// Number of index pairs `i < j` with `edges[i] == edges[j]`.
pub fn count_collisions(edges: &[Edge]) -> u64 {
    let mut counts: HashMap<Edge, u64> = HashMap::with_capacity(edges.len());
    for e in edges {
        *counts.entry(*e).or_insert(0) += 1;
    }
    counts.values().map(|&c| c * (c - 1) / 2).sum()
}

/// `C(s, 2) / r`
pub fn collision_estimate(s: usize, r: u64) -> Result<f64, EstimateError> {
    if r == 0 {
        return Err(EstimateError::NoCollisions);
    }
    let s = s as f64;
    Ok(s * (s - 1.0) / 2.0 / r as f64)
}

/// Majority vote over consecutive batches of `batch` edges: each batch votes
/// 1 iff it contains a collision; the result is 1 iff more than half vote 1.
pub fn is_collision(edges: &[Edge], batch: usize) -> u8 {
    if batch == 0 || edges.is_empty() {
        return 0;
    }
    let (mut votes, mut reps) = (0usize, 0usize);
    for chunk in edges.chunks(batch) {
        reps += 1;
        if count_collisions(chunk) > 0 {
            votes += 1;
        }
    }
    u8::from(2 * votes > reps)
}

/// Collision count and estimate over one or more batches of `s` samples.
#[derive(Clone, Debug, PartialEq)]
pub struct CollisionOutcome {
    /// Collision count; the median batch count when several batches are used.
    pub r: u64,
    pub per_batch: Vec<u64>,
}

impl CollisionOutcome {
    pub fn from_batches(edges: &[Edge], s: usize) -> Self {
        let per_batch: Vec<u64> = edges.chunks(s.max(1)).map(count_collisions).collect();
        let mut sorted = per_batch.clone();
        sorted.sort_unstable();
        let r = sorted.get(sorted.len() / 2).copied().unwrap_or(0);
        CollisionOutcome { r, per_batch }
    }
}
