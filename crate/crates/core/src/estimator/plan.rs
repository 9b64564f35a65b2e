use rand::Rng as _;

use super::{EstimateError, EstimatorParams, SampleSizes};
use crate::graph::{Edge, Vertex};
use crate::oracle::{Answer, PlanProvenance, QueryPlan, QuerySpec, Transcript};
use crate::seed;

/// The complete query plan: `|S|` Deg queries at i.i.d. uniform vertices,
/// then `|T|` RandEdge, `R · t_col` RandEdge for the collision test, and
/// `s` RandEdge (per batch) for the collision estimate.
///
/// There is no graph argument: the plan depends on `(n, params)` only.
pub fn build_sample_plan(n: usize, params: &EstimatorParams) -> QueryPlan {
    let sizes = params.sizes(n);
    let mut plan = build_degree_plan(n, params);
    plan.extend(std::iter::repeat_n(
        QuerySpec::RandEdge,
        sizes.rand_edge_total(),
    ));
    plan
}

/// Only the `|S|` Deg queries of [`build_sample_plan`].
pub fn build_degree_plan(n: usize, params: &EstimatorParams) -> QueryPlan {
    let sizes = params.sizes(n);
    let mut plan = QueryPlan::new(PlanProvenance {
        n,
        epsilon: params.epsilon,
        seed: params.master_seed,
    });
    let mut rng = seed::stream(params.plan_seed(), "degree-sample", 0);
    plan.extend((0..sizes.degree_samples).map(|_| QuerySpec::Deg(rng.gen_range(0..n))));
    plan
}

/// A transcript of [`build_sample_plan`] cut into its sections.
#[derive(Clone, Debug)]
pub struct PlanSections {
    pub sample_vertices: Vec<Vertex>,
    pub sample_degrees: Vec<usize>,
    /// Edges behind `T`.
    pub endpoint_edges: Vec<Edge>,
    /// `R` consecutive batches of `t_col` edges.
    pub is_collision_edges: Vec<Edge>,
    /// `collision_batches` consecutive batches of `s` edges.
    pub collision_edges: Vec<Edge>,
    pub sizes: SampleSizes,
}

impl PlanSections {
    pub fn split(transcript: &Transcript, params: &EstimatorParams) -> Result<Self, EstimateError> {
        let n = transcript.plan().provenance().n;
        let sizes = params.sizes(n);
        if transcript.len() != sizes.total() {
            return Err(EstimateError::TranscriptMismatch(format!(
                "expected {} answers, found {}",
                sizes.total(),
                transcript.len()
            )));
        }
        let mut entries = transcript.iter();
        let mut sample_vertices = Vec::with_capacity(sizes.degree_samples);
        let mut sample_degrees = Vec::with_capacity(sizes.degree_samples);
        for (q, a) in entries.by_ref().take(sizes.degree_samples) {
            match (q, a) {
                (QuerySpec::Deg(v), Answer::Degree(d)) => {
                    sample_vertices.push(*v);
                    sample_degrees.push(*d);
                }
                _ => {
                    return Err(EstimateError::TranscriptMismatch(format!(
                        "expected a degree answer, found {q} -> {a}"
                    )))
                }
            }
        }
        let mut take_edges = |k: usize| -> Result<Vec<Edge>, EstimateError> {
            entries
                .by_ref()
                .take(k)
                .map(|(q, a)| match a {
                    Answer::Edge(e) => Ok(*e),
                    _ => Err(EstimateError::TranscriptMismatch(format!(
                        "expected an edge answer, found {q} -> {a}"
                    ))),
                })
                .collect()
        };
        Ok(PlanSections {
            sample_vertices,
            sample_degrees,
            endpoint_edges: take_edges(sizes.edge_samples)?,
            is_collision_edges: take_edges(sizes.is_collision_total())?,
            collision_edges: take_edges(sizes.collision_total())?,
            sizes,
        })
    }
}
