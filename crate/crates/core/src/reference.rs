//! Slow definitional checks used to validate the fast paths: intervals,
//! median graphs, the Djoković–Winkler relation, convex splits and their
//! incompatibility graph, and brute-force automorphisms and isomorphisms.
//!
//! All metric notions here are combinatorial: edge lengths are ignored.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{bfs_distances, is_bipartite, is_connected, EdgeId, Graph, Vertex, INFINITE};

/// Largest graph accepted by the median and recognizer checks.
pub const REFERENCE_LIMIT: usize = 200;
/// Largest graph accepted by the automorphism and isomorphism searches.
pub const SYMMETRY_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReferenceError {
    #[error("graph has {vertex_count} vertices, the limit is {limit}")]
    TooLarge { vertex_count: usize, limit: usize },
    #[error("graph is not a median graph")]
    NotMedian(MedianCheck),
}

fn guard(g: &Graph, limit: usize) -> Result<(), ReferenceError> {
    if g.vertex_count() > limit {
        Err(ReferenceError::TooLarge {
            vertex_count: g.vertex_count(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Hop distances between all pairs; `INFINITE` across components.
pub fn all_pairs(g: &Graph) -> Vec<Vec<u64>> {
    let unit = g.unweighted();
    unit.vertices().map(|s| bfs_distances(&unit, s)).collect()
}

/// `I(u, v) = {z : d(u, v) = d(u, z) + d(z, v)}`, sorted.
pub fn interval(g: &Graph, u: Vertex, v: Vertex) -> Vec<Vertex> {
    interval_in(&all_pairs(g), u, v)
}

fn interval_in(d: &[Vec<u64>], u: Vertex, v: Vertex) -> Vec<Vertex> {
    if d[u][v] == INFINITE {
        return Vec::new();
    }
    (0..d.len())
        .filter(|&z| d[u][z] != INFINITE && d[u][z] + d[z][v] == d[u][v])
        .collect()
}

/// True when `I(u, v) ⊆ set` for all `u, v` in `set`.
pub fn is_convex(g: &Graph, set: &[Vertex]) -> bool {
    let d = all_pairs(g);
    let mut member = vec![false; g.vertex_count()];
    for &v in set {
        member[v] = true;
    }
    set.iter().all(|&u| {
        set.iter()
            .all(|&v| interval_in(&d, u, v).iter().all(|&z| member[z]))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MedianCheck {
    Median,
    Disconnected,
    /// A triple whose three intervals meet in `medians` (empty or several).
    NotMedian {
        triple: [Vertex; 3],
        medians: Vec<Vertex>,
    },
}

struct IntervalSets {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl IntervalSets {
    fn new(d: &[Vec<u64>]) -> Self {
        let n = d.len();
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * n * words];
        for u in 0..n {
            for v in 0..n {
                let base = (u * n + v) * words;
                for z in interval_in(d, u, v) {
                    bits[base + z / 64] |= 1 << (z % 64);
                }
            }
        }
        IntervalSets { n, words, bits }
    }

    fn get(&self, u: Vertex, v: Vertex) -> &[u64] {
        let base = (u * self.n + v) * self.words;
        &self.bits[base..base + self.words]
    }

    /// Elements of `I(x,y) ∩ I(y,z) ∩ I(z,x)`.
    fn meet(&self, x: Vertex, y: Vertex, z: Vertex) -> Vec<Vertex> {
        let (a, b, c) = (self.get(x, y), self.get(y, z), self.get(z, x));
        let mut out = Vec::new();
        for w in 0..self.words {
            let mut m = a[w] & b[w] & c[w];
            while m != 0 {
                out.push(w * 64 + m.trailing_zeros() as usize);
                m &= m - 1;
            }
        }
        out
    }

    fn meet_count(&self, x: Vertex, y: Vertex, z: Vertex) -> u32 {
        let (a, b, c) = (self.get(x, y), self.get(y, z), self.get(z, x));
        (0..self.words)
            .map(|w| (a[w] & b[w] & c[w]).count_ones())
            .sum()
    }
}

/// Checks `|I(x,y) ∩ I(y,z) ∩ I(z,x)| = 1` for every triple.
pub fn is_median_graph(g: &Graph) -> MedianCheck {
    if !is_connected(g) {
        return MedianCheck::Disconnected;
    }
    let sets = IntervalSets::new(&all_pairs(g));
    let n = g.vertex_count();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if sets.meet_count(x, y, z) != 1 {
                    return MedianCheck::NotMedian {
                        triple: [x, y, z],
                        medians: sets.meet(x, y, z),
                    };
                }
            }
        }
    }
    MedianCheck::Median
}

/// The unique vertex in all three pairwise intervals, if there is exactly one.
pub fn brute_force_median(g: &Graph, x: Vertex, y: Vertex, z: Vertex) -> Option<Vertex> {
    let d = all_pairs(g);
    let (a, b, c) = (
        interval_in(&d, x, y),
        interval_in(&d, y, z),
        interval_in(&d, z, x),
    );
    let common: Vec<Vertex> = a
        .into_iter()
        .filter(|v| b.contains(v) && c.contains(v))
        .collect();
    (common.len() == 1).then(|| common[0])
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Djoković–Winkler classes: `uv Θ xy` iff `d(u,x) + d(v,y) ≠ d(u,y) + d(v,x)`,
/// closed transitively. Class ids follow the smallest edge id in each class.
pub fn theta_by_distance(g: &Graph) -> Vec<usize> {
    let d = all_pairs(g);
    let m = g.edge_count();
    let mut dsu = Dsu((0..m).collect());
    for e in 0..m {
        let (u, v) = g.endpoints(e);
        for f in e + 1..m {
            let (x, y) = g.endpoints(f);
            let lhs = d[u][x].saturating_add(d[v][y]);
            let rhs = d[u][y].saturating_add(d[v][x]);
            if lhs != rhs {
                dsu.union(e, f);
            }
        }
    }
    let mut id = HashMap::new();
    (0..m)
        .map(|e| {
            let r = dsu.find(e);
            let next = id.len();
            *id.entry(r).or_insert(next)
        })
        .collect()
}

/// Complementary half-spaces `W(u,v)` and `W(v,u)` of edge `uv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexSplit {
    pub edge: EdgeId,
    pub near: Vec<Vertex>,
    pub far: Vec<Vertex>,
}

impl ConvexSplit {
    fn of_edge(g: &Graph, d: &[Vec<u64>], e: EdgeId) -> Self {
        let (u, v) = g.endpoints(e);
        let (near, far) = g.vertices().partition(|&x| d[u][x] < d[v][x]);
        ConvexSplit { edge: e, near, far }
    }
}

#[derive(Debug, Clone)]
pub struct IncGraph {
    /// One split per Θ-class, indexed by class id.
    pub splits: Vec<ConvexSplit>,
    /// Incompatibility graph over split indices.
    pub graph: Graph,
}

fn incompatible(n: usize, a: &ConvexSplit, b: &ConvexSplit) -> bool {
    let mut side = vec![0u8; n];
    for &x in &a.far {
        side[x] = 1;
    }
    let mut seen = [false; 4];
    for &x in &b.near {
        seen[side[x] as usize] = true;
    }
    for &x in &b.far {
        seen[2 + side[x] as usize] = true;
    }
    seen.iter().all(|&s| s)
}

/// Incompatibility graph of a median graph: splits cross when all four
/// pairwise intersections are nonempty.
pub fn inc_graph(g: &Graph) -> Result<IncGraph, ReferenceError> {
    match is_median_graph(g) {
        MedianCheck::Median => {}
        other => return Err(ReferenceError::NotMedian(other)),
    }
    let d = all_pairs(g);
    let classes = theta_by_distance(g);
    let count = classes.iter().copied().max().map_or(0, |c| c + 1);
    let mut splits: Vec<Option<ConvexSplit>> = vec![None; count];
    for (e, &c) in classes.iter().enumerate() {
        if splits[c].is_none() {
            splits[c] = Some(ConvexSplit::of_edge(g, &d, e));
        }
    }
    let splits: Vec<ConvexSplit> = splits
        .into_iter()
        .map(|s| s.expect("every class has an edge"))
        .collect();
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for i in 0..count {
        for j in i + 1..count {
            if incompatible(n, &splits[i], &splits[j]) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(count, &edges).expect("simple");
    Ok(IncGraph { splits, graph })
}

/// Connected median graph whose incompatibility graph is bipartite.
pub fn reference_recognizer(g: &Graph) -> bool {
    match inc_graph(g) {
        Ok(inc) => is_bipartite(&inc.graph).is_ok(),
        Err(_) => false,
    }
}

/// Like [`reference_recognizer`], refusing graphs above [`REFERENCE_LIMIT`].
pub fn reference_recognizer_checked(g: &Graph) -> Result<bool, ReferenceError> {
    guard(g, REFERENCE_LIMIT)?;
    Ok(reference_recognizer(g))
}

/// Induced 4-cycles `[a, b, c, d]` with `a` the smallest corner and `b < d`.
pub fn four_cycles(g: &Graph) -> Vec<[Vertex; 4]> {
    let n = g.vertex_count();
    let mut via: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut touched = Vec::new();
    let mut out = Vec::new();
    for a in 0..n {
        for &(b, _) in g.neighbors(a).iter().filter(|&&(b, _)| b > a) {
            for &(c, _) in g.neighbors(b).iter().filter(|&&(c, _)| c > a) {
                if via[c].is_empty() {
                    touched.push(c);
                }
                via[c].push(b);
            }
        }
        for c in touched.drain(..) {
            let mids = std::mem::take(&mut via[c]);
            if g.has_edge(a, c) {
                continue;
            }
            for i in 0..mids.len() {
                for j in i + 1..mids.len() {
                    let (b, d) = (mids[i].min(mids[j]), mids[i].max(mids[j]));
                    if !g.has_edge(b, d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

struct Profile {
    d: Vec<Vec<u64>>,
    invariant: Vec<(usize, Vec<u64>)>,
}

impl Profile {
    fn new(g: &Graph) -> Self {
        let d = all_pairs(g);
        let invariant = g
            .vertices()
            .map(|v| {
                let mut row = d[v].clone();
                row.sort_unstable();
                (g.degree(v), row)
            })
            .collect();
        Profile { d, invariant }
    }
}

/// Assignment order: repeatedly the unplaced vertex with most placed
/// neighbors, so constraints bite early.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut score = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (score[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &(w, _) in g.neighbors(v) {
            score[w] += 1;
        }
    }
    order
}

/// Counts (or finds) distance-preserving bijections `g → h`.
fn count_maps(g: &Graph, h: &Graph, stop_at_first: bool) -> u64 {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return 0;
    }
    let (pg, ph) = (Profile::new(g), Profile::new(h));
    let mut a: Vec<_> = pg.invariant.clone();
    let mut b: Vec<_> = ph.invariant.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return 0;
    }
    let order = search_order(g);
    let candidates: Vec<Vec<Vertex>> = order
        .iter()
        .map(|&v| {
            h.vertices()
                .filter(|&w| pg.invariant[v] == ph.invariant[w])
                .collect()
        })
        .collect();
    let mut search = MapSearch {
        order: &order,
        candidates: &candidates,
        g: &pg,
        h: &ph,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        count: 0,
        stop_at_first,
    };
    search.extend(0);
    search.count
}

struct MapSearch<'a> {
    order: &'a [Vertex],
    candidates: &'a [Vec<Vertex>],
    g: &'a Profile,
    h: &'a Profile,
    image: Vec<Vertex>,
    used: Vec<bool>,
    count: u64,
    stop_at_first: bool,
}

impl MapSearch<'_> {
    fn extend(&mut self, i: usize) {
        if i == self.order.len() {
            self.count += 1;
            return;
        }
        let v = self.order[i];
        for &w in &self.candidates[i] {
            if self.used[w]
                || !self.order[..i]
                    .iter()
                    .all(|&u| self.g.d[v][u] == self.h.d[w][self.image[u]])
            {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            self.extend(i + 1);
            self.used[w] = false;
            if self.stop_at_first && self.count > 0 {
                return;
            }
        }
    }
}

/// Order of the automorphism group, by exhaustive backtracking.
pub fn automorphism_count(g: &Graph) -> Result<u64, ReferenceError> {
    guard(g, SYMMETRY_LIMIT)?;
    Ok(count_maps(g, g, false))
}

pub fn graphs_isomorphic(g: &Graph, h: &Graph) -> Result<bool, ReferenceError> {
    guard(g, SYMMETRY_LIMIT)?;
    guard(h, SYMMETRY_LIMIT)?;
    Ok(count_maps(g, h, true) > 0)
}
