//! Metered query access to a [`Graph`] under the non-adaptive model.
//!
//! Queries are never answered one at a time. A caller first fixes a complete
//! [`QueryPlan`], then hands it to [`answer_plan`] (or an [`Oracle`] session)
//! and receives a [`Transcript`] with every answer at once. Since plans are
//! built before any answer exists, nothing in a plan can depend on the graph.

use std::fmt::{self, Write as _};

use rand::Rng as _;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};
use crate::seed::{self, Rng};
use rand::SeedableRng;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("RandEdge query on a graph with no edges")]
    EmptyGraph,
    #[error("query names vertex {vertex}, outside 0..{n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("neighbor queries are 1-based; index 0 is invalid")]
    ZeroNeighborIndex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuerySpec {
    Deg(Vertex),
    RandEdge,
    /// `i`-th neighbor of `v`, 1-based, in ascending vertex order.
    Nbr(Vertex, usize),
    Pair(Vertex, Vertex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QueryKind {
    Deg,
    RandEdge,
    Nbr,
    Pair,
}

impl QuerySpec {
    pub fn kind(&self) -> QueryKind {
        match self {
            QuerySpec::Deg(_) => QueryKind::Deg,
            QuerySpec::RandEdge => QueryKind::RandEdge,
            QuerySpec::Nbr(..) => QueryKind::Nbr,
            QuerySpec::Pair(..) => QueryKind::Pair,
        }
    }

    fn validate(&self, n: usize) -> Result<(), QueryError> {
        let check = |v: Vertex| {
            if v < n {
                Ok(())
            } else {
                Err(QueryError::VertexOutOfRange { vertex: v, n })
            }
        };
        match *self {
            QuerySpec::Deg(v) => check(v),
            QuerySpec::RandEdge => Ok(()),
            QuerySpec::Nbr(v, i) => {
                check(v)?;
                if i == 0 {
                    Err(QueryError::ZeroNeighborIndex)
                } else {
                    Ok(())
                }
            }
            QuerySpec::Pair(u, v) => check(u).and(check(v)),
        }
    }
}

impl fmt::Display for QuerySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuerySpec::Deg(v) => write!(f, "deg {v}"),
            QuerySpec::RandEdge => write!(f, "rand_edge"),
            QuerySpec::Nbr(v, i) => write!(f, "nbr {v} {i}"),
            QuerySpec::Pair(u, v) => write!(f, "pair {u} {v}"),
        }
    }
}

/// Parameters a plan was derived from. Plan content must be a function of
/// these alone.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanProvenance {
    pub n: usize,
    pub epsilon: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QueryPlan {
    provenance: PlanProvenance,
    queries: Vec<QuerySpec>,
}

impl QueryPlan {
    pub fn new(provenance: PlanProvenance) -> Self {
        QueryPlan {
            provenance,
            queries: Vec::new(),
        }
    }

    pub fn with_queries(provenance: PlanProvenance, queries: Vec<QuerySpec>) -> Self {
        QueryPlan {
            provenance,
            queries,
        }
    }

    pub fn push(&mut self, q: QuerySpec) {
        self.queries.push(q);
    }

    pub fn extend(&mut self, qs: impl IntoIterator<Item = QuerySpec>) {
        self.queries.extend(qs);
    }

    pub fn provenance(&self) -> PlanProvenance {
        self.provenance
    }

    pub fn queries(&self) -> &[QuerySpec] {
        &self.queries
    }

    pub fn len(&self) -> usize {
        self.queries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queries.is_empty()
    }

    /// Per-type multiplicities of the plan.
    pub fn counts(&self) -> QueryLedger {
        let mut ledger = QueryLedger::default();
        for q in &self.queries {
            ledger.record(q.kind());
        }
        ledger
    }

    /// True iff the plans issue identical query sequences (provenance ignored).
    pub fn same_queries(&self, other: &QueryPlan) -> bool {
        self.queries == other.queries
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    Degree(usize),
    Edge(Edge),
    /// `None` when the index exceeds the degree.
    Neighbor(Option<Vertex>),
    Pair(bool),
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Degree(d) => write!(f, "{d}"),
            Answer::Edge(e) => write!(f, "{} {}", e.u, e.v),
            Answer::Neighbor(Some(w)) => write!(f, "{w}"),
            Answer::Neighbor(None) => write!(f, "-"),
            Answer::Pair(b) => write!(f, "{}", u8::from(*b)),
        }
    }
}

/// Query counts by type.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryLedger {
    pub deg: u64,
    pub rand_edge: u64,
    pub nbr: u64,
    pub pair: u64,
}

impl QueryLedger {
    pub fn record(&mut self, kind: QueryKind) {
        match kind {
            QueryKind::Deg => self.deg += 1,
            QueryKind::RandEdge => self.rand_edge += 1,
            QueryKind::Nbr => self.nbr += 1,
            QueryKind::Pair => self.pair += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.deg + self.rand_edge + self.nbr + self.pair
    }

    pub fn absorb(&mut self, other: &QueryLedger) {
        self.deg += other.deg;
        self.rand_edge += other.rand_edge;
        self.nbr += other.nbr;
        self.pair += other.pair;
    }
}

impl fmt::Display for QueryLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "deg={} rand_edge={} nbr={} pair={} total={}",
            self.deg,
            self.rand_edge,
            self.nbr,
            self.pair,
            self.total()
        )
    }
}

/// A fully answered plan.
#[derive(Clone, Debug, PartialEq)]
pub struct Transcript {
    plan: QueryPlan,
    answers: Vec<Answer>,
    answer_seed: u64,
    ledger: QueryLedger,
}

impl Transcript {
    pub fn plan(&self) -> &QueryPlan {
        &self.plan
    }

    pub fn answers(&self) -> &[Answer] {
        &self.answers
    }

    pub fn answer_seed(&self) -> u64 {
        self.answer_seed
    }

    pub fn ledger(&self) -> QueryLedger {
        self.ledger
    }

    pub fn len(&self) -> usize {
        self.answers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.answers.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QuerySpec, &Answer)> {
        self.plan.queries.iter().zip(&self.answers)
    }

    /// Line-oriented dump: a provenance header, one `query -> answer` line per
    /// position, and a closing ledger line.
    pub fn dump(&self) -> String {
        let p = self.plan.provenance;
        let mut out = format!(
            "# n={} eps={} seed={} answer_seed={}\n",
            p.n, p.epsilon, p.seed, self.answer_seed
        );
        for (q, a) in self.iter() {
            writeln!(out, "{q} -> {a}").unwrap();
        }
        writeln!(out, "# ledger {}", self.ledger).unwrap();
        out
    }
}

fn answer_one(graph: &Graph, q: QuerySpec, rng: &mut Rng) -> Answer {
    match q {
        QuerySpec::Deg(v) => Answer::Degree(graph.degree(v)),
        QuerySpec::RandEdge => Answer::Edge(graph.edges()[rng.gen_range(0..graph.m())]),
        QuerySpec::Nbr(v, i) => Answer::Neighbor(graph.neighbors(v).get(i - 1).copied()),
        QuerySpec::Pair(u, v) => Answer::Pair(graph.has_edge(u, v)),
    }
}

/// Answers every query of `plan` against `graph`. RandEdge draws are i.i.d.
/// uniform over the edge list, driven by `answer_seed`.
///
/// The plan is validated up front: on error nothing is answered.
pub fn answer_plan(
    graph: &Graph,
    plan: QueryPlan,
    answer_seed: u64,
) -> Result<Transcript, QueryError> {
    let n = graph.n();
    let mut needs_edges = false;
    for q in &plan.queries {
        q.validate(n)?;
        needs_edges |= *q == QuerySpec::RandEdge;
    }
    if needs_edges && graph.m() == 0 {
        return Err(QueryError::EmptyGraph);
    }
    let mut rng = Rng::seed_from_u64(seed::derive_seed(answer_seed, "rand-edge", 0));
    let answers = plan
        .queries
        .iter()
        .map(|&q| answer_one(graph, q, &mut rng))
        .collect();
    let ledger = plan.counts();
    Ok(Transcript {
        plan,
        answers,
        answer_seed,
        ledger,
    })
}

/// A metering session over a shared graph. The ledger accumulates across
/// every plan answered in the session.
#[derive(Debug)]
pub struct Oracle<'g> {
    graph: &'g Graph,
    ledger: QueryLedger,
}

impl<'g> Oracle<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Oracle {
            graph,
            ledger: QueryLedger::default(),
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn answer(&mut self, plan: QueryPlan, answer_seed: u64) -> Result<Transcript, QueryError> {
        let t = answer_plan(self.graph, plan, answer_seed)?;
        self.ledger.absorb(&t.ledger);
        Ok(t)
    }

    pub fn ledger(&self) -> QueryLedger {
        self.ledger
    }
}

/// Checks that `plan_fn` emits the same query sequence on every graph.
///
/// All graphs must share the same vertex count; a non-adaptive plan builder
/// may only use `(n, epsilon, seed)`.
pub fn audit_nonadaptive<F>(plan_fn: F, graphs: &[Graph], epsilon: f64, seed: u64) -> bool
where
    F: Fn(&Graph, f64, u64) -> QueryPlan,
{
    let mut plans = graphs.iter().map(|g| plan_fn(g, epsilon, seed));
    let Some(first) = plans.next() else {
        return true;
    };
    plans.all(|p| p.same_queries(&first))
}
