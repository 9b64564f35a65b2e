use serde::{Deserialize, Serialize};

use super::collision::CollisionOutcome;
use super::{
    build_sample_plan, collision_estimate, is_collision, non_adaptive_components, EstimateError,
    EstimatorParams, PlanSections,
};
use crate::graph::Graph;
use crate::oracle::{answer_plan, QueryError, QueryLedger, Transcript};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Collision,
    NonCollision,
    ZeroEdges,
    Failed,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Collision => "collision",
            Branch::NonCollision => "non_collision",
            Branch::ZeroEdges => "zero_edges",
            Branch::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    /// `None` only when `branch` is `Failed`.
    pub m_hat: Option<f64>,
    pub branch: Branch,
    pub r: u64,
    pub k: u8,
    pub d_tilde_h: f64,
    pub p_tilde_h: f64,
    pub queries: QueryLedger,
}

/// Post-processes an answered [`build_sample_plan`] transcript.
///
/// Collision branch iff `r > 0` and the majority test says `k = 1`;
/// otherwise the degree/random-edge estimate, or `Failed` if `p̃_H = 0`.
pub fn estimate_from_transcript(
    transcript: &Transcript,
    params: &EstimatorParams,
) -> Result<EstimateReport, EstimateError> {
    let sections = PlanSections::split(transcript, params)?;
    let sizes = sections.sizes;
    let k = is_collision(&sections.is_collision_edges, sizes.collision_batch);
    let collisions =
        CollisionOutcome::from_batches(&sections.collision_edges, sizes.collision_samples);
    let r = collisions.r;
    let non_coll = non_adaptive_components(&sections, params, transcript.plan().provenance().n)?;

    let (m_hat, branch) = if r > 0 && k == 1 {
        (
            Some(collision_estimate(sizes.collision_samples, r)?),
            Branch::Collision,
        )
    } else {
        match non_coll.m_hat {
            Some(m) => (Some(m), Branch::NonCollision),
            None => (None, Branch::Failed),
        }
    };
    Ok(EstimateReport {
        m_hat,
        branch,
        r,
        k,
        d_tilde_h: non_coll.d_tilde_h,
        p_tilde_h: non_coll.p_tilde_h,
        queries: transcript.ledger(),
    })
}

/// Plans, answers once, and estimates. An edgeless graph yields
/// `m̂ = 0` on the `ZeroEdges` branch with no queries charged.
pub fn full_non_adaptive_edge(
    graph: &Graph,
    params: &EstimatorParams,
) -> Result<EstimateReport, EstimateError> {
    params.validate()?;
    if graph.n() < 2 {
        return Err(EstimateError::InvalidParams(format!(
            "estimation needs n >= 2, got {}",
            graph.n()
        )));
    }
    let plan = build_sample_plan(graph.n(), params);
    match answer_plan(graph, plan, params.answer_seed()) {
        Ok(transcript) => estimate_from_transcript(&transcript, params),
        Err(QueryError::EmptyGraph) => Ok(EstimateReport {
            m_hat: Some(0.0),
            branch: Branch::ZeroEdges,
            r: 0,
            k: 0,
            d_tilde_h: 0.0,
            p_tilde_h: 0.0,
            queries: QueryLedger::default(),
        }),
        Err(e) => Err(e.into()),
    }
}
