use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ExperimentError;
use crate::estimator::exact::{exact_d_h, HeavyDecomposition};
use crate::estimator::{build_degree_plan, classify_heavy, BucketConfig, EstimatorParams};
use crate::graph::Graph;
use crate::oracle::{answer_plan, Answer};
use crate::seed;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhBoundResult {
    pub epsilon: f64,
    /// `1/2 - ε/8`
    pub bound: f64,
    pub p_h: Vec<f64>,
    pub heavy_buckets: Vec<usize>,
    /// Fraction of trials with `p_H >= bound`.
    pub fraction: f64,
}

/// Per trial: draw a fresh degree sample, classify heavy buckets, and
/// compute the exact `p_H` of the resulting `I_H`.
pub fn run_ph_bound_check(
    graph: &Graph,
    base: &EstimatorParams,
    trials: usize,
    seed: u64,
) -> Result<PhBoundResult, ExperimentError> {
    if trials == 0 {
        return Err(ExperimentError::Config("trials must be at least 1".into()));
    }
    if 2 * graph.m() < graph.n() {
        return Err(ExperimentError::Config(format!(
            "graph has m = {} < n/2 = {}; the p_H bound needs m >= n/2",
            graph.m(),
            graph.n() as f64 / 2.0
        )));
    }
    let config = BucketConfig::new(graph.n(), base.gamma)?;
    let per_trial = (0..trials)
        .into_par_iter()
        .map(|i| {
            let params = base.with_seed(seed::derive_seed(seed, "ph-trial", i as u64));
            let plan = build_degree_plan(graph.n(), &params);
            let transcript = answer_plan(graph, plan, params.answer_seed())?;
            let degrees: Vec<usize> = transcript
                .answers()
                .iter()
                .filter_map(|a| match a {
                    Answer::Degree(d) => Some(*d),
                    _ => None,
                })
                .collect();
            let heavy = classify_heavy(&degrees, &config, params.epsilon);
            let indices = heavy.indices();
            let dec: HeavyDecomposition = exact_d_h(graph, &indices, &config);
            Ok((dec.d_h as f64 / (2.0 * dec.m as f64), indices.len()))
        })
        .collect::<Result<Vec<_>, ExperimentError>>()?;
    let bound = 0.5 - base.epsilon / 8.0;
    let (p_h, heavy_buckets): (Vec<f64>, Vec<usize>) = per_trial.into_iter().unzip();
    let fraction = p_h.iter().filter(|&&p| p >= bound).count() as f64 / trials as f64;
    Ok(PhBoundResult {
        epsilon: base.epsilon,
        bound,
        p_h,
        heavy_buckets,
        fraction,
    })
}
