//! Immutable simple undirected graphs, the ground truth behind every oracle.
//!
//! Vertices are `0..n`. Edges are stored normalized (`u < v`), deduplicated
//! and sorted, alongside a degree array and a CSR adjacency used to answer
//! neighbor and pair queries.

mod generators;
mod io;
mod lowerbound;
mod spec;

pub use generators::{gen_gnm, gen_named, Shape};
pub use io::{parse_edge_list, read_edge_list, render_edge_list, write_edge_list};
pub use lowerbound::{ceil_sqrt, gen_lowerbound_instance, planted_set_size, LowerBoundInstance};
pub use spec::GraphSpec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("self-loop ({0}, {0}) is not allowed in a simple graph")]
    SelfLoop(Vertex),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("requested {m} edges but only {max} vertex pairs exist")]
    TooManyEdges { m: u64, max: u64 },
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse graph spec {spec:?}: {reason}")]
    BadSpec { spec: String, reason: String },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Normalizes the pair; `None` for a self-loop.
    pub fn new(a: Vertex, b: Vertex) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    degrees: Vec<usize>,
    offsets: Vec<usize>,
    adjacency: Vec<Vertex>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

/// Builds a graph on `n` vertices, normalizing and deduplicating `raw_edges`.
pub fn build_graph<I>(n: usize, raw_edges: I) -> Result<Graph, GraphError>
where
    I: IntoIterator<Item = (Vertex, Vertex)>,
{
    let mut edges = Vec::new();
    for (a, b) in raw_edges {
        if a >= n || b >= n {
            return Err(GraphError::VertexOutOfRange { u: a, v: b, n });
        }
        edges.push(Edge::new(a, b).ok_or(GraphError::SelfLoop(a))?);
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_sorted_edges(n, edges))
}

impl Graph {
    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut degrees = vec![0usize; n];
        for e in &edges {
            degrees[e.u] += 1;
            degrees[e.v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degrees {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adjacency = vec![0; 2 * edges.len()];
        for e in &edges {
            adjacency[fill[e.u]] = e.v;
            fill[e.u] += 1;
        }
        for e in &edges {
            adjacency[fill[e.v]] = e.u;
            fill[e.v] += 1;
        }
        for v in 0..n {
            adjacency[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        let g = Graph {
            n,
            edges,
            degrees,
            offsets,
            adjacency,
        };
        assert_eq!(
            g.degrees.iter().sum::<usize>(),
            2 * g.m(),
            "handshake lemma violated"
        );
        g
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees[v]
    }

    /// Neighbors of `v` in ascending vertex order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        if a == b {
            return false;
        }
        let (small, other) = if self.degrees[a] <= self.degrees[b] {
            (a, b)
        } else {
            (b, a)
        };
        self.neighbors(small).binary_search(&other).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}
