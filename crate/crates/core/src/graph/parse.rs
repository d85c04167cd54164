//! Text format for graphs and trees.
//!
//! ```text
//! # comment
//! weighted        (optional header: every edge line carries a length)
//! tree            (optional header: the graph must be a tree)
//! 0 1 5
//! 1 7 2
//! vertex 9        (isolated vertex)
//! ```
//!
//! Vertex ids are arbitrary nonnegative integers; they are compacted to
//! `0..n` in increasing order and the map is kept in [`GraphFile::ids`].

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use super::{is_connected, Graph, GraphBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Graph,
    Tree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    /// Original id of each compacted vertex, strictly increasing.
    pub ids: Vec<u64>,
    pub kind: GraphKind,
}

impl GraphFile {
    /// Compacted id of an original vertex id.
    pub fn vertex(&self, original: u64) -> Option<usize> {
        self.ids.binary_search(&original).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(u64, u64),
    #[error("nonpositive weight on edge {0}-{1}")]
    NonPositiveWeight(u64, u64),
    #[error("header `{0}` after the first edge")]
    LateHeader(String),
    #[error("input is not valid UTF-8")]
    NotUtf8,
    #[error("declared a tree but the graph is not a tree")]
    NotATree,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_graph(bytes: &[u8]) -> Result<GraphFile, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| err(0, ParseErrorKind::NotUtf8))?;
    let mut weighted = false;
    let mut kind = GraphKind::Graph;
    let mut in_body = false;
    let mut raw_edges: Vec<(u64, u64, u64)> = Vec::new();
    let mut ids = BTreeSet::new();
    let mut seen = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let malformed = || err(line_no, ParseErrorKind::Malformed(line.to_string()));
        match tokens[0] {
            "weighted" | "tree" if tokens.len() == 1 => {
                if in_body {
                    return Err(err(
                        line_no,
                        ParseErrorKind::LateHeader(tokens[0].to_string()),
                    ));
                }
                if tokens[0] == "weighted" {
                    weighted = true;
                } else {
                    kind = GraphKind::Tree;
                }
                continue;
            }
            "vertex" => {
                if tokens.len() != 2 {
                    return Err(malformed());
                }
                let v: u64 = tokens[1].parse().map_err(|_| malformed())?;
                ids.insert(v);
                in_body = true;
                continue;
            }
            _ => {}
        }
        let expected = if weighted { 3 } else { 2 };
        if tokens.len() != expected {
            return Err(malformed());
        }
        let u: u64 = tokens[0].parse().map_err(|_| malformed())?;
        let v: u64 = tokens[1].parse().map_err(|_| malformed())?;
        let w: u64 = if weighted {
            let w: i128 = tokens[2].parse().map_err(|_| malformed())?;
            if w <= 0 {
                return Err(err(line_no, ParseErrorKind::NonPositiveWeight(u, v)));
            }
            u64::try_from(w).map_err(|_| malformed())?
        } else {
            1
        };
        if u == v {
            return Err(err(line_no, ParseErrorKind::SelfLoop(u)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(
                line_no,
                ParseErrorKind::DuplicateEdge(u.min(v), u.max(v)),
            ));
        }
        ids.insert(u);
        ids.insert(v);
        raw_edges.push((u, v, w));
        in_body = true;
    }

    let ids: Vec<u64> = ids.into_iter().collect();
    let index: HashMap<u64, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut builder = GraphBuilder::new(ids.len());
    for &(u, v, w) in &raw_edges {
        let (a, b) = (index[&u], index[&v]);
        if weighted {
            builder.add_weighted_edge(a, b, w).expect("validated above");
        } else {
            builder.add_edge(a, b).expect("validated above");
        }
    }
    let graph = builder.build();
    if kind == GraphKind::Tree
        && (graph.vertex_count() == 0
            || graph.edge_count() + 1 != graph.vertex_count()
            || !is_connected(&graph))
    {
        return Err(err(0, ParseErrorKind::NotATree));
    }
    Ok(GraphFile { graph, ids, kind })
}

/// Serializes `g` in the graph file format. `ids` maps compacted vertices to
/// the ids written out (identity when `None`).
pub fn write_graph(g: &Graph, ids: Option<&[u64]>, kind: GraphKind) -> String {
    let id = |v: usize| ids.map_or(v as u64, |m| m[v]);
    let mut out = String::new();
    if kind == GraphKind::Tree {
        out.push_str("tree\n");
    }
    if g.is_weighted() {
        out.push_str("weighted\n");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if g.is_weighted() {
            writeln!(out, "{} {} {}", id(u), id(v), g.length(e)).unwrap();
        } else {
            writeln!(out, "{} {}", id(u), id(v)).unwrap();
        }
    }
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        writeln!(out, "vertex {}", id(v)).unwrap();
    }
    out
}
