//! Sublinear-query edge counting under the non-adaptive query model.
//!
//! - [`graph`]: immutable graphs, generators, edge-list I/O and lower-bound instances.
//! - [`oracle`]: `Deg` / `RandEdge` / `Nbr` / `Pair` queries, answered plan-at-a-time and metered.
//! - [`estimator`]: degree bucketing, the heavy-bucket estimator, collision tests, exact references.
//! - [`experiments`]: seeded trial harnesses and their CSV/JSON outputs.

pub mod estimator;
pub mod experiments;
pub mod graph;
pub mod oracle;
pub mod seed;

pub use estimator::{full_non_adaptive_edge, Branch, EstimateReport, EstimatorParams};
pub use graph::{build_graph, Edge, Graph, GraphSpec, Vertex};
pub use oracle::{answer_plan, QueryLedger, QueryPlan, QuerySpec, Transcript};
