//! Plain-text edge lists: a header line with `n`, then one `u v` pair per
//! line, 0-indexed and whitespace-separated.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{build_graph, Graph, GraphError, Vertex};

fn parse_vertex(tok: &str, line: usize) -> Result<Vertex, GraphError> {
    tok.parse().map_err(|_| GraphError::Parse {
        line,
        reason: format!("expected a non-negative integer, found {tok:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        reason: "missing vertex-count header".into(),
    })?;
    let mut toks = header.split_whitespace();
    let n = parse_vertex(toks.next().unwrap_or_default(), header_line)?;
    if toks.next().is_some() {
        return Err(GraphError::Parse {
            line: header_line,
            reason: "header must contain only the vertex count".into(),
        });
    }
    let mut raw = Vec::new();
    for (line, content) in lines {
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(GraphError::Parse {
                line,
                reason: format!("expected \"u v\", found {content:?}"),
            });
        }
        let u = parse_vertex(toks[0], line)?;
        let v = parse_vertex(toks[1], line)?;
        if u >= n || v >= n {
            return Err(GraphError::Parse {
                line,
                reason: format!("edge ({u}, {v}) has an endpoint outside 0..{n}"),
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        raw.push((u, v));
    }
    build_graph(n, raw)
}

pub fn render_edge_list(graph: &Graph) -> String {
    let mut out = String::with_capacity(16 * (graph.m() + 1));
    writeln!(out, "{}", graph.n()).unwrap();
    for e in graph.edges() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    parse_edge_list(&fs::read_to_string(path)?)
}

pub fn write_edge_list(graph: &Graph, path: impl AsRef<Path>) -> Result<(), GraphError> {
    fs::write(path, render_edge_list(graph))?;
    Ok(())
}
