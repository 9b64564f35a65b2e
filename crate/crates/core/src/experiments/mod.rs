//! Seeded, reproducible experiment harnesses.
//!
//! Every experiment is a pure function of its configuration, master seed
//! included. Trials run in parallel but results are collected in trial order.

mod accuracy;
mod budget;
mod lowerbound;
mod output;
mod ph_bound;

pub use accuracy::{
    run_accuracy_trials, BranchCounts, GraphSource, MeanQueries, ParamOverrides, TrialConfig,
    TrialCsvRow, TrialRecord, TrialStats, TrialSummary,
};
pub use budget::{budget_ratio_bound, run_query_budget_check, BudgetRow, BudgetTable};
pub use lowerbound::{
    default_probe_set, probe_hits, run_distinguishing_experiment, DistinguishResult,
    DistinguishTrial,
};
pub use output::{artifact_stem, write_csv, write_json, ArtifactPaths};
pub use ph_bound::{run_ph_bound_check, PhBoundResult};

use thiserror::Error;

use crate::estimator::EstimateError;
use crate::graph::GraphError;
use crate::oracle::QueryError;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid experiment configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Estimate(#[from] EstimateError),
    #[error(transparent)]
    Query(#[from] QueryError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output failed: {0}")]
    Json(#[from] serde_json::Error),
}
