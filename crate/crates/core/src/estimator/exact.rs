//! Full-information references computed directly from the graph.
//!
//! These bypass the query model entirely and exist to check the estimator.

use super::{BucketConfig, EstimateError};
use crate::graph::Graph;

/// Exact bucket sizes `|B_i|` and degree masses `deg(B_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BucketPartition {
    pub sizes: Vec<usize>,
    pub degree_sums: Vec<u64>,
    pub isolated: usize,
}

pub fn bucket_partition(graph: &Graph, config: &BucketConfig) -> BucketPartition {
    let mut sizes = vec![0; config.t()];
    let mut degree_sums = vec![0; config.t()];
    let mut isolated = 0;
    for &d in graph.degrees() {
        match config.bucket_of(d) {
            Some(i) => {
                sizes[i] += 1;
                degree_sums[i] += d as u64;
            }
            None => isolated += 1,
        }
    }
    BucketPartition {
        sizes,
        degree_sums,
        isolated,
    }
}

/// `Σ_{i ∈ I_H} |B_i| (1+γ)^i`.
pub fn full_information_mass(
    partition: &BucketPartition,
    heavy: &[usize],
    config: &BucketConfig,
) -> f64 {
    heavy
        .iter()
        .map(|&i| partition.sizes[i] as f64 * config.weight(i))
        .sum()
}

/// Degree mass and edge split between heavy (`H`) and light (`L`) vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeavyDecomposition {
    pub m: u64,
    /// `d_H = Σ_{v ∈ H} deg(v)`
    pub d_h: u64,
    /// `|E(H)|`
    pub heavy_edges: u64,
    /// `|E(L)|`
    pub light_edges: u64,
    /// `|E(H, L)|`
    pub cross_edges: u64,
}

fn heavy_mask(config: &BucketConfig, heavy: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; config.t()];
    for &i in heavy {
        mask[i] = true;
    }
    mask
}

/// `d_H` plus the `H`/`L` edge split. Degree-0 vertices are light.
///
/// Panics if `m = |E(H)|+|E(L)|+|E(H,L)|` or `d_H = 2|E(H)|+|E(H,L)|` fails.
pub fn exact_d_h(graph: &Graph, heavy: &[usize], config: &BucketConfig) -> HeavyDecomposition {
    let mask = heavy_mask(config, heavy);
    let is_heavy: Vec<bool> = graph
        .degrees()
        .iter()
        .map(|&d| config.bucket_of(d).is_some_and(|i| mask[i]))
        .collect();
    let d_h: u64 = graph
        .degrees()
        .iter()
        .zip(&is_heavy)
        .filter(|(_, &h)| h)
        .map(|(&d, _)| d as u64)
        .sum();
    let (mut heavy_edges, mut light_edges, mut cross_edges) = (0, 0, 0);
    for e in graph.edges() {
        match (is_heavy[e.u], is_heavy[e.v]) {
            (true, true) => heavy_edges += 1,
            (false, false) => light_edges += 1,
            _ => cross_edges += 1,
        }
    }
    let out = HeavyDecomposition {
        m: graph.m() as u64,
        d_h,
        heavy_edges,
        light_edges,
        cross_edges,
    };
    assert_eq!(out.m, heavy_edges + light_edges + cross_edges);
    assert_eq!(out.d_h, 2 * heavy_edges + cross_edges);
    out
}

/// `p_H = d_H / 2m`
pub fn exact_p_h(
    graph: &Graph,
    heavy: &[usize],
    config: &BucketConfig,
) -> Result<f64, EstimateError> {
    if graph.m() == 0 {
        return Err(EstimateError::UndefinedForEmptyGraph);
    }
    let dec = exact_d_h(graph, heavy, config);
    Ok(dec.d_h as f64 / (2.0 * dec.m as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_named, Shape};

    #[test]
    fn clique_all_heavy() {
        let g = gen_named(Shape::CliquePlusIsolated { k: 100 }, 100, 0).unwrap();
        let cfg = BucketConfig::new(100, 0.025).unwrap();
        let i = cfg.bucket_of(99).unwrap();
        assert_eq!(exact_p_h(&g, &[i], &cfg).unwrap(), 1.0);
        let dec = exact_d_h(&g, &[i], &cfg);
        assert_eq!(dec.d_h, 9900);
        assert_eq!(dec.heavy_edges, 4950);
    }

    #[test]
    fn empty_heavy_set() {
        let g = gen_named(Shape::Star, 30, 0).unwrap();
        let cfg = BucketConfig::new(30, 0.1).unwrap();
        let dec = exact_d_h(&g, &[], &cfg);
        assert_eq!(dec.d_h, 0);
        assert_eq!(dec.light_edges, 29);
        assert_eq!(exact_p_h(&g, &[], &cfg).unwrap(), 0.0);
    }

    #[test]
    fn star_split() {
        let g = gen_named(Shape::Star, 30, 0).unwrap();
        let cfg = BucketConfig::new(30, 0.1).unwrap();
        let leaf_bucket = cfg.bucket_of(1).unwrap();
        let dec = exact_d_h(&g, &[leaf_bucket], &cfg);
        assert_eq!(dec.d_h, 29);
        assert_eq!(dec.cross_edges, 29);
        assert_eq!(exact_p_h(&g, &[leaf_bucket], &cfg).unwrap(), 0.5);
    }

    #[test]
    fn empty_graph_has_no_p_h() {
        let g = Graph::empty(5);
        let cfg = BucketConfig::new(5, 0.1).unwrap();
        assert_eq!(
            exact_p_h(&g, &[0], &cfg),
            Err(EstimateError::UndefinedForEmptyGraph)
        );
        let part = bucket_partition(&g, &cfg);
        assert_eq!(part.isolated, 5);
    }
}
