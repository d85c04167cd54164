//! Constant-time distance and median queries through the two tree factors,
//! and exact distances between points of the cell complex.

use thiserror::Error;

use crate::factorization::{Color, TwoTreeEmbedding};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::polygon::CellComplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown square {0}")]
    UnknownSquare(usize),
    #[error("offset {offset} exceeds the length {length}")]
    OffsetOutOfBounds { offset: u64, length: u64 },
    #[error("internal defect: no vertex at tree coordinates ({0}, {1})")]
    MedianMissing(Vertex, Vertex),
}

/// Lowest common ancestors of a rooted tree in O(1) per query, via a sparse
/// table over the Euler tour.
#[derive(Debug, Clone)]
pub struct LcaStructure {
    first: Vec<u32>,
    depth: Vec<u32>,
    wdepth: Vec<u64>,
    /// Level `k` starts at `k * tour_len`; entries are vertices of minimum
    /// depth over windows of length `2^k`.
    table: Vec<u32>,
    /// Same windows, holding the minimum weighted depth. Edge lengths are
    /// positive, so this is the weighted depth of the window's LCA.
    wtable: Vec<u64>,
    tour_len: usize,
    edges: Vec<(Vertex, Vertex, u64)>,
}

impl LcaStructure {
    /// Preprocesses `tree` rooted at vertex 0 in O(n log n).
    pub fn new(tree: &Graph) -> Self {
        let n = tree.vertex_count();
        let edges = tree
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| (u, v, tree.length(e)))
            .collect();
        if n == 0 {
            return LcaStructure {
                first: vec![],
                depth: vec![],
                wdepth: vec![],
                table: vec![],
                wtable: vec![],
                tour_len: 0,
                edges,
            };
        }
        let mut first = vec![u32::MAX; n];
        let mut depth = vec![0u32; n];
        let mut wdepth = vec![0u64; n];
        let mut tour: Vec<u32> = Vec::with_capacity(2 * n);
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(0, usize::MAX, 0)];
        first[0] = 0;
        tour.push(0);
        while let Some(top) = stack.last_mut() {
            let (v, parent, i) = *top;
            if let Some(&(w, e)) = tree.neighbors(v).get(i) {
                top.2 += 1;
                if w == parent {
                    continue;
                }
                depth[w] = depth[v] + 1;
                wdepth[w] = wdepth[v] + tree.length(e);
                first[w] = tour.len() as u32;
                tour.push(w as u32);
                stack.push((w, v, 0));
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    tour.push(p as u32);
                }
            }
        }
        let len = tour.len();
        let levels = usize::BITS as usize - len.leading_zeros() as usize;
        let mut wtable: Vec<u64> = tour.iter().map(|&v| wdepth[v as usize]).collect();
        let mut table = tour;
        table.reserve(len * (levels - 1));
        wtable.reserve(len * (levels - 1));
        for k in 1..levels {
            let half = 1 << (k - 1);
            let prev = (k - 1) * len;
            for i in 0..len {
                let j = if i + half < len {
                    prev + i + half
                } else {
                    prev + i
                };
                let (a, b) = (table[prev + i], table[j]);
                table.push(if depth[b as usize] < depth[a as usize] {
                    b
                } else {
                    a
                });
                wtable.push(wtable[prev + i].min(wtable[j]));
            }
        }
        LcaStructure {
            first,
            depth,
            wdepth,
            table,
            wtable,
            tour_len: len,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.first.len()
    }

    #[inline]
    pub fn lca(&self, u: Vertex, v: Vertex) -> Vertex {
        let (mut l, mut r) = (self.first[u] as usize, self.first[v] as usize);
        if l > r {
            std::mem::swap(&mut l, &mut r);
        }
        let k = (usize::BITS - 1 - (r - l + 1).leading_zeros()) as usize;
        let base = k * self.tour_len;
        let a = self.table[base + l];
        let b = self.table[base + r + 1 - (1 << k)];
        (if self.depth[b as usize] < self.depth[a as usize] {
            b
        } else {
            a
        }) as Vertex
    }

    #[inline]
    pub fn dist(&self, u: Vertex, v: Vertex) -> u64 {
        self.wdepth[u] + self.wdepth[v] - 2 * self.min_wdepth(self.first[u], self.first[v])
    }

    /// Weighted depth of the LCA of the vertices first visited at tour
    /// positions `l` and `r`.
    #[inline]
    fn min_wdepth(&self, l: u32, r: u32) -> u64 {
        let (l, r) = if l <= r {
            (l as usize, r as usize)
        } else {
            (r as usize, l as usize)
        };
        let k = (usize::BITS - 1 - (r - l + 1).leading_zeros()) as usize;
        let base = k * self.tour_len;
        self.wtable[base + l].min(self.wtable[base + r + 1 - (1 << k)])
    }

    /// Tree median: the deepest of the three pairwise LCAs.
    pub fn median(&self, x: Vertex, y: Vertex, z: Vertex) -> Vertex {
        let candidates = [self.lca(x, y), self.lca(y, z), self.lca(z, x)];
        candidates
            .into_iter()
            .max_by_key(|&c| self.depth[c])
            .expect("three candidates")
    }

    /// Endpoints (lower id first) and length of tree edge `e`.
    pub fn edge(&self, e: EdgeId) -> Option<(Vertex, Vertex, u64)> {
        self.edges.get(e).copied()
    }

    fn check(&self, p: DendronPosition) -> Result<(), OracleError> {
        match p {
            DendronPosition::Vertex(v) if v >= self.vertex_count() => {
                Err(OracleError::UnknownVertex(v))
            }
            DendronPosition::Vertex(_) => Ok(()),
            DendronPosition::Edge { edge, offset } => {
                let (_, _, length) = self.edge(edge).ok_or(OracleError::UnknownEdge(edge))?;
                if offset > length {
                    Err(OracleError::OffsetOutOfBounds { offset, length })
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Geodesic length between two points of the metric tree.
    pub fn dendron_dist(&self, p: DendronPosition, q: DendronPosition) -> Result<u64, OracleError> {
        self.check(p)?;
        self.check(q)?;
        if let (
            DendronPosition::Edge { edge: e, offset: a },
            DendronPosition::Edge { edge: f, offset: b },
        ) = (p, q)
        {
            if e == f {
                return Ok(a.abs_diff(b));
            }
        }
        let ends = |x: DendronPosition| -> [(Vertex, u64); 2] {
            match x {
                DendronPosition::Vertex(v) => [(v, 0), (v, 0)],
                DendronPosition::Edge { edge, offset } => {
                    let (u, v, len) = self.edges[edge];
                    [(u, offset), (v, len - offset)]
                }
            }
        };
        let mut best = u64::MAX;
        for (u, du) in ends(p) {
            for (v, dv) in ends(q) {
                best = best.min(du + self.dist(u, v) + dv);
            }
        }
        Ok(best)
    }
}

/// A point of a metric tree: a vertex, or a tree edge with an offset from
/// its lower-id endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DendronPosition {
    Vertex(Vertex),
    Edge { edge: EdgeId, offset: u64 },
}

/// A point of the cell complex of a partial double tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexPoint {
    Vertex(Vertex),
    /// `offset` is measured from the lower-id endpoint of `edge`.
    Edge {
        edge: EdgeId,
        offset: u64,
    },
    /// `a` runs along the color-1 side and `b` along the color-2 side,
    /// both from the square's smallest-id corner.
    Square {
        square: usize,
        a: u64,
        b: u64,
    },
}

/// Distance and median queries on a partial double tree.
#[derive(Debug, Clone)]
pub struct DistanceOracle {
    pub lca: [LcaStructure; 2],
    coords: [Vec<Vertex>; 2],
    /// Per graph vertex, what a distance query reads from both trees.
    records: Vec<Record>,
    embedding: TwoTreeEmbedding,
}

#[derive(Debug, Clone, Copy)]
struct Record {
    first: [u32; 2],
    wdepth: [u64; 2],
}

impl DistanceOracle {
    pub fn build(e: &TwoTreeEmbedding) -> Self {
        let lca = [
            LcaStructure::new(&e.trees[0]),
            LcaStructure::new(&e.trees[1]),
        ];
        let records = (0..e.coords[0].len())
            .map(|v| {
                let (a, b) = (e.coords[0][v], e.coords[1][v]);
                Record {
                    first: [lca[0].first[a], lca[1].first[b]],
                    wdepth: [lca[0].wdepth[a], lca[1].wdepth[b]],
                }
            })
            .collect();
        DistanceOracle {
            lca,
            coords: e.coords.clone(),
            records,
            embedding: e.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.coords[0].len()
    }

    pub fn embedding(&self) -> &TwoTreeEmbedding {
        &self.embedding
    }

    fn check(&self, v: Vertex) -> Result<(), OracleError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(OracleError::UnknownVertex(v))
        }
    }

    /// Exact `d_G(u, v)`.
    #[inline]
    pub fn dist(&self, u: Vertex, v: Vertex) -> Result<u64, OracleError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.dist_unchecked(u, v))
    }

    #[inline]
    pub fn dist_unchecked(&self, u: Vertex, v: Vertex) -> u64 {
        let (a, b) = (&self.records[u], &self.records[v]);
        (0..2)
            .map(|i| a.wdepth[i] + b.wdepth[i] - 2 * self.lca[i].min_wdepth(a.first[i], b.first[i]))
            .sum()
    }

    /// The median of `x, y, z` in `G`: the vertex at the pair of tree medians.
    pub fn median(&self, x: Vertex, y: Vertex, z: Vertex) -> Result<Vertex, OracleError> {
        for v in [x, y, z] {
            self.check(v)?;
        }
        let m: [Vertex; 2] = std::array::from_fn(|i| {
            let c = &self.coords[i];
            self.lca[i].median(c[x], c[y], c[z])
        });
        self.embedding
            .vertex_at(m[0], m[1])
            .ok_or(OracleError::MedianMissing(m[0], m[1]))
    }

    /// Exact geodesic distance between two points of the cell complex.
    pub fn point_dist(
        &self,
        complex: &CellComplex,
        p: ComplexPoint,
        q: ComplexPoint,
    ) -> Result<u64, OracleError> {
        let pc = point_coords(&self.embedding, complex, p)?;
        let qc = point_coords(&self.embedding, complex, q)?;
        Ok(self.lca[0].dendron_dist(pc[0], qc[0])? + self.lca[1].dendron_dist(pc[1], qc[1])?)
    }
}

/// Position reached from tree vertex `from` by moving `offset` along the
/// tree edge `edge`.
fn advance(tree: &Graph, from: Vertex, edge: EdgeId, offset: u64) -> DendronPosition {
    let (u, v) = tree.endpoints(edge);
    let len = tree.length(edge);
    if offset == 0 {
        return DendronPosition::Vertex(from);
    }
    if offset == len {
        return DendronPosition::Vertex(if from == u { v } else { u });
    }
    let from_lower = if from == u { offset } else { len - offset };
    DendronPosition::Edge {
        edge,
        offset: from_lower,
    }
}

/// Lifts a complex point to its pair of positions in the two trees.
pub fn point_coords(
    e: &TwoTreeEmbedding,
    complex: &CellComplex,
    p: ComplexPoint,
) -> Result<[DendronPosition; 2], OracleError> {
    let g = &complex.graph;
    let at = |v: Vertex| {
        [
            DendronPosition::Vertex(e.coords[0][v]),
            DendronPosition::Vertex(e.coords[1][v]),
        ]
    };
    let along = |mut pos: [DendronPosition; 2], base: Vertex, edge: EdgeId, offset: u64| {
        let length = g.length(edge);
        if offset > length {
            return Err(OracleError::OffsetOutOfBounds { offset, length });
        }
        let class = e.partition.class_of[edge];
        let i = e.coloring[class].index();
        pos[i] = advance(
            &e.trees[i],
            e.coords[i][base],
            e.tree_edge_of_class(class),
            offset,
        );
        Ok(pos)
    };
    match p {
        ComplexPoint::Vertex(v) => {
            if v >= g.vertex_count() {
                return Err(OracleError::UnknownVertex(v));
            }
            Ok(at(v))
        }
        ComplexPoint::Edge { edge, offset } => {
            if edge >= g.edge_count() {
                return Err(OracleError::UnknownEdge(edge));
            }
            let (u, _) = g.endpoints(edge);
            along(at(u), u, edge, offset)
        }
        ComplexPoint::Square { square, a, b } => {
            let s = complex
                .squares
                .get(square)
                .ok_or(OracleError::UnknownSquare(square))?;
            let base = *s.vertices.iter().min().expect("four corners");
            let i = s.corner_index(base).expect("corner");
            let (x, y) = s.edges_at(i);
            let (first, second) = if e.edge_color(x) == Color::First {
                (x, y)
            } else {
                (y, x)
            };
            let pos = along(at(base), base, first, a)?;
            along(pos, base, second, b)
        }
    }
}
