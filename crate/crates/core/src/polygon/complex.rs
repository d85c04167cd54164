use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::recognition::{build_links, recognize, Links, Square};
use crate::reference::four_cycles;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("square {square} has opposite edges {first} and {second} of different lengths")]
    WeightMismatch {
        square: usize,
        first: EdgeId,
        second: EdgeId,
    },
}

/// Rectangular cell complex: the network's vertices and edges plus one
/// rectangle per square.
#[derive(Debug, Clone)]
pub struct CellComplex {
    pub graph: Graph,
    pub squares: Vec<Square>,
}

impl CellComplex {
    /// Side lengths `(|v0 v1|, |v1 v2|)` of a square.
    pub fn side_lengths(&self, s: usize) -> (u64, u64) {
        let e = self.squares[s].edges;
        (self.graph.length(e[0]), self.graph.length(e[1]))
    }
}

/// Realizes `g` as a cell complex. Squares are the recognizer's list when
/// `g` is a partial double tree, otherwise every induced 4-cycle.
pub fn complex_from_network(g: &Graph) -> Result<CellComplex, ComplexError> {
    let squares = match recognize(g).certificate() {
        Some(cert) => cert.squares().to_vec(),
        None => four_cycles(g)
            .into_iter()
            .map(|c| Square::from_cycle(g, c).expect("4-cycle"))
            .collect(),
    };
    for (i, s) in squares.iter().enumerate() {
        for k in 0..2 {
            let (a, b) = (s.edges[k], s.edges[k + 2]);
            if g.length(a) != g.length(b) {
                return Err(ComplexError::WeightMismatch {
                    square: i,
                    first: a,
                    second: b,
                });
            }
        }
    }
    Ok(CellComplex {
        graph: g.clone(),
        squares,
    })
}

#[derive(Debug, Clone)]
pub struct RamifiedReport {
    pub ramified: bool,
    /// Per vertex: is its link bipartite.
    pub bipartite_links: Vec<bool>,
    pub links: Links,
}

impl RamifiedReport {
    pub fn non_bipartite(&self) -> Vec<Vertex> {
        (0..self.bipartite_links.len())
            .filter(|&v| !self.bipartite_links[v])
            .collect()
    }
}

/// The complex is a ramified rectilinear polygon when its 1-skeleton is a
/// partial double tree and the complex has exactly the recognized squares.
pub fn check_ramified(c: &CellComplex) -> RamifiedReport {
    let links = build_links(&c.graph, c.squares.clone());
    let bipartite_links: Vec<bool> = c.graph.vertices().map(|v| links.is_bipartite(v)).collect();
    let ramified = match recognize(&c.graph).certificate() {
        Some(cert) => {
            let mut ours: Vec<_> = c.squares.iter().map(Square::corner_set).collect();
            let mut theirs: Vec<_> = cert.squares().iter().map(Square::corner_set).collect();
            ours.sort_unstable();
            theirs.sort_unstable();
            ours == theirs && bipartite_links.iter().all(|&b| b)
        }
        None => false,
    };
    RamifiedReport {
        ramified,
        bipartite_links,
        links,
    }
}
