//! Heavy-bucket classification and the degree/random-edge estimator.

use std::collections::HashMap;

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::{BucketConfig, EstimateError, EstimatorParams, PlanSections};
use crate::graph::{Edge, Vertex};
use crate::oracle::Transcript;
use crate::seed;

/// `(1/t) · √(ε / (6n))`
pub fn heavy_threshold(config: &BucketConfig, epsilon: f64) -> f64 {
    (epsilon / (6.0 * config.n() as f64)).sqrt() / config.t() as f64
}

/// Bucket counts of a degree sample and the heavy index set `I_H`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeavySet {
    /// `|S_i|` per bucket, with multiplicity.
    pub bucket_counts: Vec<usize>,
    /// `|S|`, including degree-0 samples.
    pub sample_size: usize,
    pub threshold: f64,
    heavy: Vec<bool>,
}

impl HeavySet {
    pub fn is_heavy(&self, bucket: usize) -> bool {
        self.heavy.get(bucket).copied().unwrap_or(false)
    }

    /// `I_H` in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.heavy.len()).filter(|&i| self.heavy[i]).collect()
    }

    pub fn is_empty(&self) -> bool {
        !self.heavy.iter().any(|&h| h)
    }
}

/// Buckets the sampled degrees and marks `i` heavy iff `|S_i|/|S| >= threshold`.
pub fn classify_heavy(sample_degrees: &[usize], config: &BucketConfig, epsilon: f64) -> HeavySet {
    let mut bucket_counts = vec![0usize; config.t()];
    for &d in sample_degrees {
        if let Some(i) = config.bucket_of(d) {
            bucket_counts[i] += 1;
        }
    }
    let threshold = heavy_threshold(config, epsilon);
    let size = sample_degrees.len();
    let heavy = bucket_counts
        .iter()
        .map(|&c| size > 0 && c as f64 / size as f64 >= threshold)
        .collect();
    HeavySet {
        bucket_counts,
        sample_size: size,
        threshold,
        heavy,
    }
}

/// `d̃_H = (n/|S|) Σ_{i ∈ I_H} |S_i| (1+γ)^i`
pub fn estimate_d_tilde_h(heavy: &HeavySet, config: &BucketConfig) -> f64 {
    if heavy.sample_size == 0 {
        return 0.0;
    }
    let mass: f64 = heavy
        .indices()
        .into_iter()
        .map(|i| heavy.bucket_counts[i] as f64 * config.weight(i))
        .sum();
    config.n() as f64 / heavy.sample_size as f64 * mass
}

/// Picks one endpoint of every edge with a fair coin.
pub fn choose_endpoints(edges: &[Edge], coin_seed: u64) -> Vec<Vertex> {
    let mut rng = seed::stream(coin_seed, "endpoint", 0);
    edges
        .iter()
        .map(|e| if rng.gen_bool(0.5) { e.u } else { e.v })
        .collect()
}

/// `p̃_H = (n/|S|) · (1/|T|) · Σ_{i ∈ I_H} |T_i|`, where `|T_i|` counts pairs
/// (element of `T`, copy in the multiset `S`) of the same vertex whose
/// bucket is `i`.
pub fn estimate_p_tilde_h(
    sample_vertices: &[Vertex],
    sample_degrees: &[usize],
    endpoints: &[Vertex],
    heavy: &HeavySet,
    config: &BucketConfig,
) -> f64 {
    if endpoints.is_empty() || sample_vertices.is_empty() {
        return 0.0;
    }
    // vertex -> (copies in S, bucket)
    let mut copies: HashMap<Vertex, (usize, Option<usize>)> = HashMap::new();
    for (&v, &d) in sample_vertices.iter().zip(sample_degrees) {
        copies.entry(v).or_insert((0, config.bucket_of(d))).0 += 1;
    }
    let matched: usize = endpoints
        .iter()
        .filter_map(|w| copies.get(w))
        .filter(|(_, b)| b.is_some_and(|i| heavy.is_heavy(i)))
        .map(|(c, _)| c)
        .sum();
    let n = config.n() as f64;
    n / sample_vertices.len() as f64 * (matched as f64 / endpoints.len() as f64)
}

/// Intermediate and final values of the degree/random-edge estimator.
#[derive(Clone, Debug, PartialEq)]
pub struct NonAdaptiveOutcome {
    /// `d̃_H / (2 p̃_H)`; `None` when `p̃_H = 0`.
    pub m_hat: Option<f64>,
    pub d_tilde_h: f64,
    pub p_tilde_h: f64,
    pub heavy: HeavySet,
}

pub fn non_adaptive_components(
    sections: &PlanSections,
    params: &EstimatorParams,
    n: usize,
) -> Result<NonAdaptiveOutcome, EstimateError> {
    let config = BucketConfig::new(n, params.gamma)?;
    let heavy = classify_heavy(&sections.sample_degrees, &config, params.epsilon);
    let d_tilde_h = estimate_d_tilde_h(&heavy, &config);
    let endpoints = choose_endpoints(&sections.endpoint_edges, params.coin_seed());
    let p_tilde_h = estimate_p_tilde_h(
        &sections.sample_vertices,
        &sections.sample_degrees,
        &endpoints,
        &heavy,
        &config,
    );
    let m_hat = (p_tilde_h > 0.0).then(|| d_tilde_h / (2.0 * p_tilde_h));
    Ok(NonAdaptiveOutcome {
        m_hat,
        d_tilde_h,
        p_tilde_h,
        heavy,
    })
}

/// `m̂ = d̃_H / (2 p̃_H)` from the degree and `T` sections of a transcript.
pub fn non_adaptive_edge(
    transcript: &Transcript,
    params: &EstimatorParams,
) -> Result<NonAdaptiveOutcome, EstimateError> {
    let sections = PlanSections::split(transcript, params)?;
    let out = non_adaptive_components(&sections, params, transcript.plan().provenance().n)?;
    if out.m_hat.is_none() {
        return Err(EstimateError::DegenerateEstimate);
    }
    Ok(out)
}
