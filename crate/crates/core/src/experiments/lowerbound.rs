//! Distinguishing the two lower-bound graphs from a budget of `q` samples.

use rand::Rng as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ExperimentError;
use crate::estimator::count_collisions;
use crate::graph::{gen_lowerbound_instance, planted_set_size, Edge, LowerBoundInstance};
use crate::oracle::{answer_plan, Answer, PlanProvenance, QueryPlan, QuerySpec};
use crate::seed;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistinguishTrial {
    pub trial: usize,
    pub seed: u64,
    pub collisions_a: u64,
    pub collisions_b: u64,
    pub correct_a: bool,
    pub correct_b: bool,
    /// Whether any local probe of the fixed probe set hit the planted set.
    pub probe_hit: bool,
    /// Local probe answers agree between graph A and graph B.
    pub probes_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistinguishResult {
    pub n: usize,
    pub q: usize,
    pub trials: usize,
    pub seed: u64,
    pub planted_size: usize,
    /// Guess graph B iff the collision count exceeds this.
    pub threshold: f64,
    pub expected_collisions_a: f64,
    pub expected_collisions_b: f64,
    pub mean_collisions_a: f64,
    pub mean_collisions_b: f64,
    /// `mean_collisions_b / mean_collisions_a`; `None` if A saw no collisions.
    pub collision_ratio: Option<f64>,
    /// Accuracy of the midpoint rule above.
    pub accuracy: f64,
    /// Guess graph B iff the collision count is at least this; the cutoff
    /// with the highest empirical accuracy over these trials.
    pub best_cutoff: u64,
    /// In-sample accuracy of `best_cutoff`, an upper envelope over all
    /// collision-count thresholds.
    pub best_threshold_accuracy: f64,
    pub probe_set_size: usize,
    pub probe_miss_rate: f64,
    /// `1 - q·|planted| / n`, the union bound on the miss rate.
    pub probe_miss_bound: f64,
    /// Every probe set that missed saw identical answers on both graphs.
    pub blind_when_missed: bool,
    pub records: Vec<DistinguishTrial>,
}

/// A fixed set of `size` local probes cycling through Deg, Nbr and Pair,
/// drawn from `seed` alone.
pub fn default_probe_set(n: usize, size: usize, seed: u64) -> Vec<QuerySpec> {
    let mut rng = seed::stream(seed, "local-probes", 0);
    (0..size)
        .map(|i| match i % 3 {
            0 => QuerySpec::Deg(rng.gen_range(0..n)),
            1 => QuerySpec::Nbr(rng.gen_range(0..n), 1),
            _ => {
                let u = rng.gen_range(0..n);
                let mut v = rng.gen_range(0..n - 1);
                if v >= u {
                    v += 1;
                }
                QuerySpec::Pair(u, v)
            }
        })
        .collect()
}

/// Whether a probe could see an edge of the planted instance: a Deg or Nbr
/// probe needs its vertex planted, a Pair probe needs both endpoints
/// planted. Every other answer equals the isolated-vertex answer.
pub fn probe_hits(probe: &QuerySpec, instance: &LowerBoundInstance) -> bool {
    match *probe {
        QuerySpec::Deg(v) | QuerySpec::Nbr(v, _) => instance.is_planted(v),
        QuerySpec::Pair(u, v) => instance.is_planted(u) && instance.is_planted(v),
        QuerySpec::RandEdge => true,
    }
}

fn sample_edges(
    instance_graph: &crate::graph::Graph,
    q: usize,
    n: usize,
    answer_seed: u64,
) -> Result<Vec<Edge>, ExperimentError> {
    let plan = QueryPlan::with_queries(
        PlanProvenance {
            n,
            epsilon: 0.0,
            seed: answer_seed,
        },
        vec![QuerySpec::RandEdge; q],
    );
    let t = answer_plan(instance_graph, plan, answer_seed)?;
    Ok(t.answers()
        .iter()
        .filter_map(|a| match a {
            Answer::Edge(e) => Some(*e),
            _ => None,
        })
        .collect())
}

pub fn run_distinguishing_experiment(
    n: usize,
    q: usize,
    trials: usize,
    seed: u64,
) -> Result<DistinguishResult, ExperimentError> {
    if q < 2 {
        return Err(ExperimentError::Config(format!(
            "q must be at least 2, got {q}"
        )));
    }
    if trials == 0 {
        return Err(ExperimentError::Config("trials must be at least 1".into()));
    }
    let pairs = (q * (q - 1) / 2) as f64;
    let expected_a = pairs / n as f64;
    let expected_b = pairs / (n / 2 - 1).max(1) as f64;
    let threshold = (expected_a + expected_b) / 2.0;
    let probes = default_probe_set(n, q, seed);

    let records = (0..trials)
        .into_par_iter()
        .map(|i| {
            let trial_seed = seed::derive_seed(seed, "lowerbound-trial", i as u64);
            let inst = gen_lowerbound_instance(n, trial_seed)?;
            let xa = count_collisions(&sample_edges(
                &inst.graph_a,
                q,
                n,
                seed::derive_seed(trial_seed, "samples-a", 0),
            )?);
            let xb = count_collisions(&sample_edges(
                &inst.graph_b,
                q,
                n,
                seed::derive_seed(trial_seed, "samples-b", 0),
            )?);
            let probe_hit = probes.iter().any(|p| probe_hits(p, &inst));
            let probe_plan = |g: &crate::graph::Graph| {
                let plan = QueryPlan::with_queries(
                    PlanProvenance {
                        n,
                        epsilon: 0.0,
                        seed,
                    },
                    probes.clone(),
                );
                answer_plan(g, plan, 0).map(|t| t.answers().to_vec())
            };
            let probes_agree = probe_plan(&inst.graph_a)? == probe_plan(&inst.graph_b)?;
            Ok(DistinguishTrial {
                trial: i,
                seed: trial_seed,
                collisions_a: xa,
                collisions_b: xb,
                correct_a: (xa as f64) <= threshold,
                correct_b: (xb as f64) > threshold,
                probe_hit,
                probes_agree,
            })
        })
        .collect::<Result<Vec<_>, ExperimentError>>()?;

    let t = trials as f64;
    let mean_a = records.iter().map(|r| r.collisions_a as f64).sum::<f64>() / t;
    let mean_b = records.iter().map(|r| r.collisions_b as f64).sum::<f64>() / t;
    let correct = records
        .iter()
        .map(|r| usize::from(r.correct_a) + usize::from(r.correct_b))
        .sum::<usize>();
    let (best_cutoff, best_correct) = best_cutoff(&records);
    let planted_size = planted_set_size(n);
    Ok(DistinguishResult {
        n,
        q,
        trials,
        seed,
        planted_size,
        threshold,
        expected_collisions_a: expected_a,
        expected_collisions_b: expected_b,
        mean_collisions_a: mean_a,
        mean_collisions_b: mean_b,
        collision_ratio: (mean_a > 0.0).then(|| mean_b / mean_a),
        accuracy: correct as f64 / (2.0 * t),
        best_cutoff,
        best_threshold_accuracy: best_correct as f64 / (2.0 * t),
        probe_set_size: probes.len(),
        probe_miss_rate: records.iter().filter(|r| !r.probe_hit).count() as f64 / t,
        probe_miss_bound: 1.0 - (q * planted_size) as f64 / n as f64,
        blind_when_missed: records.iter().all(|r| r.probe_hit || r.probes_agree),
        records,
    })
}

/// Sweeps every cutoff `c` for the rule "B iff X >= c" and returns the
/// best one with its number of correct guesses. Ties keep the smaller `c`.
fn best_cutoff(records: &[DistinguishTrial]) -> (u64, usize) {
    let max = records
        .iter()
        .map(|r| r.collisions_a.max(r.collisions_b))
        .max()
        .unwrap_or(0);
    (0..=max + 1)
        .map(|c| {
            let correct = records
                .iter()
                .map(|r| usize::from(r.collisions_a < c) + usize::from(r.collisions_b >= c))
                .sum::<usize>();
            (c, correct)
        })
        .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best })
}
