//! Finite simple graphs with optional positive integer edge lengths.
//!
//! Every other module consumes [`Graph`]. Vertices are `0..n`, edges are
//! numbered in insertion order and stored with their smaller endpoint first.
//! Adjacency lists are kept sorted by neighbor id, which the LexBFS engine
//! relies on for its smallest-index tie-breaking.

mod lexbfs;
mod parse;
mod traverse;

pub use lexbfs::{bfs_order, lexbfs, Label, LexBfsOrder};
pub(crate) use lexbfs::{lexbfs_with, Incidence};
pub use parse::{parse_graph, write_graph, GraphFile, GraphKind, ParseError, ParseErrorKind};
pub use traverse::{
    articulation_points, bfs_distances, components, is_biconnected, is_bipartite, is_connected,
    OddCycle, INFINITE,
};

use std::collections::HashSet;

use thiserror::Error;

/// Vertex identifier, always in `0..vertex_count`.
pub type Vertex = usize;
/// Edge identifier, always in `0..edge_count`.
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
    #[error("edge {0}-{1} has nonpositive length")]
    NonPositiveLength(Vertex, Vertex),
    #[error("graph is not connected")]
    NotConnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// Neighbors of `v` are `adjacent[offsets[v]..offsets[v + 1]]`.
    offsets: Vec<usize>,
    adjacent: Vec<(Vertex, EdgeId)>,
    edges: Vec<(Vertex, Vertex)>,
    lengths: Option<Vec<u64>>,
}

impl Graph {
    /// Graph on `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            offsets: vec![0; vertex_count + 1],
            adjacent: Vec::new(),
            edges: Vec::new(),
            lengths: None,
        }
    }

    /// Unit-length graph from an edge list.
    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut builder = GraphBuilder::new(vertex_count);
        for &(u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    /// Weighted graph from `(u, v, length)` triples.
    pub fn from_weighted_edges(
        vertex_count: usize,
        edges: &[(Vertex, Vertex, u64)],
    ) -> Result<Self, GraphError> {
        let mut builder = GraphBuilder::new(vertex_count);
        for &(u, v, w) in edges {
            builder.add_weighted_edge(u, v, w)?;
        }
        Ok(builder.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Edge endpoints `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Neighbors of `v` with the connecting edge ids, sorted by neighbor.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacent[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn is_weighted(&self) -> bool {
        self.lengths.is_some()
    }

    /// Length of edge `e` (1 for unweighted graphs).
    pub fn length(&self, e: EdgeId) -> u64 {
        self.lengths.as_ref().map_or(1, |l| l[e])
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        let adj = self.neighbors(a);
        adj.binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|i| adj[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The same graph with all lengths reset to 1.
    pub fn unweighted(&self) -> Graph {
        Graph {
            offsets: self.offsets.clone(),
            adjacent: self.adjacent.clone(),
            edges: self.edges.clone(),
            lengths: None,
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut builder = GraphBuilder::new(shift + other.vertex_count());
        let weighted = self.is_weighted() || other.is_weighted();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            builder.push_unchecked(u, v, weighted.then(|| self.length(e)));
        }
        for (e, &(u, v)) in other.edges.iter().enumerate() {
            builder.push_unchecked(u + shift, v + shift, weighted.then(|| other.length(e)));
        }
        builder.build()
    }
}

/// Incremental constructor enforcing the simple-graph invariants.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    lengths: Vec<u64>,
    weighted: bool,
    seen: HashSet<(Vertex, Vertex)>,
}

impl GraphBuilder {
    pub fn new(vertex_count: usize) -> Self {
        GraphBuilder {
            vertex_count,
            edges: Vec::new(),
            lengths: Vec::new(),
            weighted: false,
            seen: HashSet::new(),
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId, GraphError> {
        self.insert(u, v, 1)
    }

    pub fn add_weighted_edge(
        &mut self,
        u: Vertex,
        v: Vertex,
        length: u64,
    ) -> Result<EdgeId, GraphError> {
        if length == 0 {
            return Err(GraphError::NonPositiveLength(u, v));
        }
        self.weighted = true;
        self.insert(u, v, length)
    }

    fn insert(&mut self, u: Vertex, v: Vertex, length: u64) -> Result<EdgeId, GraphError> {
        for x in [u, v] {
            if x >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if !self.seen.insert(key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        self.edges.push(key);
        self.lengths.push(length);
        Ok(self.edges.len() - 1)
    }

    fn push_unchecked(&mut self, u: Vertex, v: Vertex, length: Option<u64>) {
        if let Some(w) = length {
            self.weighted = true;
            self.lengths.push(w);
        } else {
            self.lengths.push(1);
        }
        self.seen.insert((u.min(v), u.max(v)));
        self.edges.push((u.min(v), u.max(v)));
    }

    pub fn build(self) -> Graph {
        let n = self.vertex_count;
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &self.edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut fill = offsets.clone();
        let mut adjacent = vec![(0, 0); offsets[n]];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adjacent[fill[u]] = (v, e);
            fill[u] += 1;
            adjacent[fill[v]] = (u, e);
            fill[v] += 1;
        }
        for v in 0..n {
            adjacent[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph {
            offsets,
            adjacent,
            edges: self.edges,
            lengths: self.weighted.then_some(self.lengths),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
        assert_eq!(
            Graph::from_weighted_edges(2, &[(0, 1, 0)]),
            Err(GraphError::NonPositiveLength(0, 1))
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::from_edges(4, &[(2, 0), (0, 3), (1, 0)]).unwrap();
        let nbrs: Vec<_> = g.neighbors(0).iter().map(|&(w, _)| w).collect();
        assert_eq!(nbrs, vec![1, 2, 3]);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            assert!(u < v);
            assert_eq!(g.edge_between(u, v), Some(e));
            assert_eq!(g.edge_between(v, u), Some(e));
        }
        assert_eq!(g.edge_between(1, 2), None);
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let a = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let u = a.disjoint_union(&b);
        assert_eq!(u.vertex_count(), 5);
        assert!(u.has_edge(2, 3) && u.has_edge(3, 4) && !u.has_edge(1, 2));
    }
}
