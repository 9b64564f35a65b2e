//! Non-adaptive edge estimation from `Deg` and `RandEdge` queries.
//!
//! The pipeline is split along the plan/answer boundary:
//!
//! 1. [`build_sample_plan`] fixes every query from `(n, params)` alone.
//! 2. The oracle answers the whole plan at once.
//! 3. [`estimate_from_transcript`] post-processes the answers: a degree
//!    sample is bucketed geometrically, heavy buckets are read off the sample,
//!    the heavy degree mass `d_H` and the heavy endpoint probability `p_H` are
//!    estimated, and `m ≈ d_H / (2 p_H)`. A birthday-paradox collision test
//!    decides whether the graph is sparse enough for the direct collision
//!    estimate `C(s,2)/r` instead.
//!
//! [`exact`] holds brute-force references that read the whole graph; they are
//! used by tests and experiments, never by the estimator itself.

mod buckets;
mod collision;
pub mod exact;
mod heavy;
mod params;
mod plan;
mod report;

pub use buckets::{bucket_count, bucket_index, BucketConfig};
pub use collision::{collision_estimate, count_collisions, is_collision, CollisionOutcome};
pub use heavy::{
    choose_endpoints, classify_heavy, estimate_d_tilde_h, estimate_p_tilde_h, heavy_threshold,
    non_adaptive_components, non_adaptive_edge, HeavySet, NonAdaptiveOutcome,
};
pub use params::{EstimatorParams, SampleSizes};
pub use plan::{build_degree_plan, build_sample_plan, PlanSections};
pub use report::{estimate_from_transcript, full_non_adaptive_edge, Branch, EstimateReport};

use thiserror::Error;

use crate::oracle::QueryError;

#[derive(Debug, Error, PartialEq)]
pub enum EstimateError {
    #[error("invalid estimator parameters: {0}")]
    InvalidParams(String),
    #[error("degree 0 belongs to no bucket")]
    NoBucket,
    #[error("collision estimate needs at least one collision")]
    NoCollisions,
    #[error("heavy endpoint estimate is zero; d_H / (2 p_H) is undefined")]
    DegenerateEstimate,
    #[error("p_H is undefined on a graph with no edges")]
    UndefinedForEmptyGraph,
    #[error("transcript does not match the sample plan: {0}")]
    TranscriptMismatch(String),
    #[error(transparent)]
    Query(#[from] QueryError),
}
