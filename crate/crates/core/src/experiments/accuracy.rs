use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ExperimentError;
use crate::estimator::{full_non_adaptive_edge, Branch, EstimatorParams};
use crate::graph::{read_edge_list, Graph, GraphSpec};
use crate::oracle::QueryLedger;
use crate::seed;

#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    Generator(GraphSpec),
    File(PathBuf),
}

impl GraphSource {
    /// Generated graphs use a seed derived from `master_seed`.
    pub fn resolve(&self, master_seed: u64) -> Result<Graph, ExperimentError> {
        Ok(match self {
            GraphSource::Generator(spec) => {
                spec.generate(seed::derive_seed(master_seed, "graph", 0))?
            }
            GraphSource::File(path) => read_edge_list(path)?,
        })
    }

    pub fn label(&self) -> String {
        match self {
            GraphSource::Generator(spec) => spec.to_string(),
            GraphSource::File(path) => path.display().to_string(),
        }
    }
}

/// Optional replacements for the defaulted estimator constants.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ParamOverrides {
    pub c_s: Option<f64>,
    pub c_t: Option<f64>,
    pub c_f: Option<f64>,
    pub c_r: Option<f64>,
    pub gamma: Option<f64>,
    pub collision_batches: Option<usize>,
}

impl ParamOverrides {
    pub fn apply(&self, epsilon: f64) -> Result<EstimatorParams, ExperimentError> {
        let mut p = EstimatorParams::new(epsilon)?;
        p = p.with_constants(
            self.c_s.unwrap_or(p.c_s),
            self.c_t.unwrap_or(p.c_t),
            self.c_f.unwrap_or(p.c_f),
            self.c_r.unwrap_or(p.c_r),
        )?;
        if let Some(g) = self.gamma {
            p = p.with_gamma(g)?;
        }
        if let Some(b) = self.collision_batches {
            p = p.with_collision_batches(b)?;
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialConfig {
    pub source: GraphSource,
    pub epsilon: f64,
    pub trials: usize,
    pub master_seed: u64,
    pub overrides: ParamOverrides,
}

impl TrialConfig {
    pub fn new(source: GraphSource, epsilon: f64, trials: usize, master_seed: u64) -> Self {
        TrialConfig {
            source,
            epsilon,
            trials,
            master_seed,
            overrides: ParamOverrides::default(),
        }
    }

    /// Estimator parameters for trial `i`.
    pub fn trial_params(&self, base: &EstimatorParams, i: usize) -> EstimatorParams {
        base.with_seed(seed::derive_seed(self.master_seed, "trial", i as u64))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub m_hat: Option<f64>,
    pub branch: Branch,
    pub r: u64,
    pub k: u8,
    /// `|m̂ - m| / m`; absent for `m = 0` or a failed estimate.
    pub rel_error: Option<f64>,
    pub success: bool,
    pub queries: QueryLedger,
}

/// Flat form of [`TrialRecord`] for CSV output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialCsvRow {
    pub trial: usize,
    pub seed: u64,
    pub m_hat: Option<f64>,
    pub branch: Branch,
    pub r: u64,
    pub k: u8,
    pub rel_error: Option<f64>,
    pub success: bool,
    pub deg: u64,
    pub rand_edge: u64,
    pub nbr: u64,
    pub pair: u64,
}

impl From<&TrialRecord> for TrialCsvRow {
    fn from(r: &TrialRecord) -> Self {
        TrialCsvRow {
            trial: r.trial,
            seed: r.seed,
            m_hat: r.m_hat,
            branch: r.branch,
            r: r.r,
            k: r.k,
            rel_error: r.rel_error,
            success: r.success,
            deg: r.queries.deg,
            rand_edge: r.queries.rand_edge,
            nbr: r.queries.nbr,
            pair: r.queries.pair,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BranchCounts {
    pub collision: usize,
    pub non_collision: usize,
    pub zero_edges: usize,
    pub failed: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MeanQueries {
    pub deg: f64,
    pub rand_edge: f64,
    pub nbr: f64,
    pub pair: f64,
    pub total: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub epsilon: f64,
    pub trials: usize,
    pub master_seed: u64,
    /// Resolved parameters, shared by every trial except for the seed.
    pub params: EstimatorParams,
    pub success_rate: f64,
    pub mean_rel_error: Option<f64>,
    pub max_rel_error: Option<f64>,
    pub branches: BranchCounts,
    pub mean_queries: MeanQueries,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialStats {
    pub summary: TrialSummary,
    pub records: Vec<TrialRecord>,
}

impl TrialStats {
    pub fn csv_rows(&self) -> Vec<TrialCsvRow> {
        self.records.iter().map(TrialCsvRow::from).collect()
    }
}

pub fn run_accuracy_trials(config: &TrialConfig) -> Result<TrialStats, ExperimentError> {
    if config.trials == 0 {
        return Err(ExperimentError::Config("trials must be at least 1".into()));
    }
    let graph = config.source.resolve(config.master_seed)?;
    let base = config.overrides.apply(config.epsilon)?;
    run_trials_on(&graph, &config.source.label(), config, &base)
}

fn run_trials_on(
    graph: &Graph,
    label: &str,
    config: &TrialConfig,
    base: &EstimatorParams,
) -> Result<TrialStats, ExperimentError> {
    let m = graph.m();
    let eps = base.epsilon;
    let records = (0..config.trials)
        .into_par_iter()
        .map(|i| {
            let params = config.trial_params(base, i);
            let rep = full_non_adaptive_edge(graph, &params)?;
            let rel_error = match (rep.m_hat, m) {
                (Some(est), m) if m > 0 => Some((est - m as f64).abs() / m as f64),
                _ => None,
            };
            let success = match rep.m_hat {
                Some(est) => (est - m as f64).abs() <= eps * m as f64,
                None => false,
            };
            Ok(TrialRecord {
                trial: i,
                seed: params.master_seed,
                m_hat: rep.m_hat,
                branch: rep.branch,
                r: rep.r,
                k: rep.k,
                rel_error,
                success,
                queries: rep.queries,
            })
        })
        .collect::<Result<Vec<_>, ExperimentError>>()?;

    let count = records.len() as f64;
    let mut branches = BranchCounts::default();
    let mut mean_queries = MeanQueries::default();
    for r in &records {
        match r.branch {
            Branch::Collision => branches.collision += 1,
            Branch::NonCollision => branches.non_collision += 1,
            Branch::ZeroEdges => branches.zero_edges += 1,
            Branch::Failed => branches.failed += 1,
        }
        mean_queries.deg += r.queries.deg as f64 / count;
        mean_queries.rand_edge += r.queries.rand_edge as f64 / count;
        mean_queries.nbr += r.queries.nbr as f64 / count;
        mean_queries.pair += r.queries.pair as f64 / count;
        mean_queries.total += r.queries.total() as f64 / count;
    }
    let errors: Vec<f64> = records.iter().filter_map(|r| r.rel_error).collect();
    let summary = TrialSummary {
        graph: label.to_string(),
        n: graph.n(),
        m,
        epsilon: eps,
        trials: config.trials,
        master_seed: config.master_seed,
        params: base.with_seed(config.master_seed),
        success_rate: records.iter().filter(|r| r.success).count() as f64 / count,
        mean_rel_error: (!errors.is_empty())
            .then(|| errors.iter().sum::<f64>() / errors.len() as f64),
        max_rel_error: errors.iter().copied().reduce(f64::max),
        branches,
        mean_queries,
    };
    Ok(TrialStats { summary, records })
}
