//! Named graph families, simplex graphs and seeded random instances.
//!
//! Every random generator takes a 64-bit seed and draws from
//! [`seeded_rng`]; independent streams are derived with [`split_rng`].

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::polygon::{Point, RectPolygon};
use crate::reference::{is_convex, is_median_graph, MedianCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{what} must be at least {min}")]
    TooSmall { what: &'static str, min: usize },
    #[error("{what} must be at most {max}")]
    TooLarge { what: &'static str, max: usize },
    #[error("step sizes must be a nonempty range of positive integers")]
    BadStepRange,
    #[error("the expanded set is not convex")]
    NotConvex,
    #[error("the input graph is not a median graph")]
    NotMedian,
    #[error("vertex {0} is out of range")]
    UnknownVertex(Vertex),
}

fn at_least(what: &'static str, value: usize, min: usize) -> Result<(), GenError> {
    if value < min {
        Err(GenError::TooSmall { what, min })
    } else {
        Ok(())
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Child stream seeded from the parent; the parent advances by one draw.
pub fn split_rng(parent: &mut ChaCha8Rng) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(parent.gen())
}

pub fn gen_path(n: usize) -> Result<Graph, GenError> {
    at_least("path length", n, 1)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges).expect("path"))
}

pub fn gen_cycle(n: usize) -> Result<Graph, GenError> {
    at_least("cycle length", n, 3)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges).expect("cycle"))
}

/// `P_rows □ P_cols`; vertex `(i, j)` has id `i * cols + j`.
pub fn gen_grid(rows: usize, cols: usize) -> Result<Graph, GenError> {
    at_least("grid rows", rows, 1)?;
    at_least("grid columns", cols, 1)?;
    let mut edges = Vec::with_capacity(2 * rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Ok(Graph::from_edges(rows * cols, &edges).expect("grid"))
}

/// `Q_d` on bitmasks `0..2^d`.
pub fn gen_hypercube(d: usize) -> Result<Graph, GenError> {
    at_least("hypercube dimension", d, 1)?;
    if d > 24 {
        return Err(GenError::TooLarge {
            what: "hypercube dimension",
            max: 24,
        });
    }
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Ok(Graph::from_edges(n, &edges).expect("hypercube"))
}

/// Uniform labeled tree on `n` vertices via a random Prüfer sequence.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    at_least("tree size", n, 1)?;
    if n <= 2 {
        return gen_path(n);
    }
    let mut rng = seeded_rng(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("a leaf remains");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let u = leaves.pop_first().expect("two leaves remain");
    let v = leaves.pop_first().expect("two leaves remain");
    edges.push((u, v));
    Ok(Graph::from_edges(n, &edges).expect("tree"))
}

/// Spider with legs of lengths 1, 2 and 3; its only automorphism is the identity.
pub fn asymmetric_tree7() -> Graph {
    Graph::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).expect("tree")
}

/// Simplex graph together with the clique each of its vertices stands for.
#[derive(Debug, Clone)]
pub struct SimplexGraph {
    pub graph: Graph,
    /// Sorted vertex set of `f` per vertex of `graph`, ordered by size and
    /// then lexicographically; vertex 0 is the empty clique.
    pub cliques: Vec<Vec<Vertex>>,
}

/// All cliques of `f` (including the empty one) by recursive extension.
pub fn cliques(f: &Graph) -> Vec<Vec<Vertex>> {
    fn extend(
        f: &Graph,
        current: &mut Vec<Vertex>,
        candidates: &[Vertex],
        out: &mut Vec<Vec<Vertex>>,
    ) {
        out.push(current.clone());
        for (i, &v) in candidates.iter().enumerate() {
            let rest: Vec<Vertex> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| f.has_edge(v, w))
                .collect();
            current.push(v);
            extend(f, current, &rest, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let all: Vec<Vertex> = f.vertices().collect();
    extend(f, &mut Vec::new(), &all, &mut out);
    out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// `κ(f)`: cliques of `f`, adjacent when they differ in exactly one vertex.
pub fn simplex_graph(f: &Graph) -> SimplexGraph {
    let cliques = cliques(f);
    let id: HashMap<&[Vertex], usize> = cliques
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_slice(), i))
        .collect();
    let mut edges = Vec::new();
    for (i, c) in cliques.iter().enumerate() {
        for k in 0..c.len() {
            let mut smaller = c.clone();
            smaller.remove(k);
            edges.push((id[smaller.as_slice()], i));
        }
    }
    edges.sort_unstable();
    let graph = Graph::from_edges(cliques.len(), &edges).expect("simplex graph");
    SimplexGraph { graph, cliques }
}

/// `κ(C_n)`: the hub (empty clique) is vertex 0.
pub fn cogwheel(n: usize) -> Result<Graph, GenError> {
    Ok(simplex_graph(&gen_cycle(n)?).graph)
}

/// `κ(κ(f))`.
pub fn iterated_simplex(f: &Graph) -> Graph {
    simplex_graph(&simplex_graph(f).graph).graph
}

/// Cartesian product `a □ b`; vertex `(i, j)` has id `i * |b| + j`.
pub fn cartesian_product(a: &Graph, b: &Graph) -> Graph {
    let nb = b.vertex_count();
    let mut builder = GraphBuilder::new(a.vertex_count() * nb);
    let weighted = a.is_weighted() || b.is_weighted();
    let mut add = |u: usize, v: usize, len: u64| {
        if weighted {
            builder.add_weighted_edge(u, v, len).expect("product edge");
        } else {
            builder.add_edge(u, v).expect("product edge");
        }
    };
    for i in a.vertices() {
        for (e, &(x, y)) in b.edges().iter().enumerate() {
            add(i * nb + x, i * nb + y, b.length(e));
        }
    }
    for (e, &(x, y)) in a.edges().iter().enumerate() {
        for j in b.vertices() {
            add(x * nb + j, y * nb + j, a.length(e));
        }
    }
    builder.build()
}

/// Convex expansion of a median graph along `u_set`: each `u` gets a copy
/// `u'` (ids `n, n+1, ...` in increasing order of `u`), joined to `u`, with
/// copies adjacent whenever their originals are.
pub fn peripheral_expansion(g: &Graph, u_set: &[Vertex]) -> Result<Graph, GenError> {
    let n = g.vertex_count();
    let mut set: Vec<Vertex> = u_set.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(GenError::UnknownVertex(v));
    }
    if set.is_empty() {
        return Err(GenError::NotConvex);
    }
    if !matches!(is_median_graph(g), MedianCheck::Median) {
        return Err(GenError::NotMedian);
    }
    if !is_convex(g, &set) {
        return Err(GenError::NotConvex);
    }
    let copy: HashMap<Vertex, Vertex> = set.iter().enumerate().map(|(i, &u)| (u, n + i)).collect();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    edges.extend(set.iter().map(|&u| (u, copy[&u])));
    for &(a, b) in g.edges() {
        if let (Some(&ca), Some(&cb)) = (copy.get(&a), copy.get(&b)) {
            edges.push((ca, cb));
        }
    }
    Ok(Graph::from_edges(n + set.len(), &edges).expect("expansion"))
}

fn check_range(range: &RangeInclusive<i64>) -> Result<(), GenError> {
    if *range.start() < 1 || range.start() > range.end() {
        Err(GenError::BadStepRange)
    } else {
        Ok(())
    }
}

/// Monotone staircase: corners `(0,0), (x1,0), (x1,y1), (x2,y1), ..., (xs,ys), (0,ys)`
/// with `x1 > ... > xs > 0` and `0 < y1 < ... < ys`, step sizes drawn
/// uniformly from `step_sizes`. One step gives a rectangle.
pub fn gen_staircase_polygon(
    steps: usize,
    seed: u64,
    step_sizes: RangeInclusive<i64>,
) -> Result<RectPolygon, GenError> {
    at_least("staircase steps", steps, 1)?;
    check_range(&step_sizes)?;
    let mut rng = seeded_rng(seed);
    let widths: Vec<i64> = (0..steps)
        .map(|_| rng.gen_range(step_sizes.clone()))
        .collect();
    let heights: Vec<i64> = (0..steps)
        .map(|_| rng.gen_range(step_sizes.clone()))
        .collect();
    let mut x = vec![0i64; steps + 1];
    for i in (0..steps).rev() {
        x[i] = x[i + 1] + widths[i];
    }
    let mut corners = vec![Point::new(0, 0)];
    let mut y = 0;
    for i in 0..steps {
        corners.push(Point::new(x[i], y));
        y += heights[i];
        corners.push(Point::new(x[i], y));
    }
    corners.push(Point::new(0, y));
    Ok(RectPolygon::new(corners).expect("staircase is simple"))
}

/// Random simple polyomino of `cells` unit squares, grown from one cell,
/// with holes filled and diagonal pinches removed, then stretched by random
/// column widths and row heights from `step_sizes`. Unlike staircases these
/// polygons are generally not orthogonally convex.
pub fn gen_polyomino_polygon(
    cells: usize,
    seed: u64,
    step_sizes: RangeInclusive<i64>,
) -> Result<RectPolygon, GenError> {
    at_least("polyomino cells", cells, 1)?;
    check_range(&step_sizes)?;
    let mut rng = seeded_rng(seed);
    let mut occupied: HashSet<(i64, i64)> = HashSet::from([(0, 0)]);
    let mut list = vec![(0i64, 0i64)];
    const DIRS: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
    while list.len() < cells {
        let &(x, y) = list.choose(&mut rng).expect("nonempty");
        let (dx, dy) = DIRS[rng.gen_range(0..4)];
        if occupied.insert((x + dx, y + dy)) {
            list.push((x + dx, y + dy));
        }
    }
    regularize(&mut occupied);

    let (min_x, max_x) = bounds(occupied.iter().map(|c| c.0));
    let (min_y, max_y) = bounds(occupied.iter().map(|c| c.1));
    let mut col = vec![0i64];
    for _ in min_x..=max_x {
        col.push(col.last().unwrap() + rng.gen_range(step_sizes.clone()));
    }
    let mut row = vec![0i64];
    for _ in min_y..=max_y {
        row.push(row.last().unwrap() + rng.gen_range(step_sizes.clone()));
    }
    let outline = trace_boundary(&occupied);
    let corners = outline
        .into_iter()
        .map(|(x, y)| Point::new(col[(x - min_x) as usize], row[(y - min_y) as usize]))
        .collect();
    Ok(RectPolygon::new(corners).expect("regularized polyomino is simple"))
}

fn bounds(values: impl Iterator<Item = i64>) -> (i64, i64) {
    values.fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

/// Fills holes and diagonal-only contacts until the cell set is a
/// topological disk.
fn regularize(occupied: &mut HashSet<(i64, i64)>) {
    loop {
        let (min_x, max_x) = bounds(occupied.iter().map(|c| c.0));
        let (min_y, max_y) = bounds(occupied.iter().map(|c| c.1));
        let mut changed = false;

        let mut outside = HashSet::from([(min_x - 1, min_y - 1)]);
        let mut queue = VecDeque::from([(min_x - 1, min_y - 1)]);
        while let Some((x, y)) = queue.pop_front() {
            for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let c = (x + dx, y + dy);
                if c.0 < min_x - 1 || c.0 > max_x + 1 || c.1 < min_y - 1 || c.1 > max_y + 1 {
                    continue;
                }
                if !occupied.contains(&c) && outside.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        for x in min_x..=max_x {
            for y in min_y..=max_y {
                if !outside.contains(&(x, y)) && occupied.insert((x, y)) {
                    changed = true;
                }
            }
        }

        for x in min_x..=max_x + 1 {
            for y in min_y..=max_y + 1 {
                let has = |c: (i64, i64)| occupied.contains(&c);
                let (sw, se, nw, ne) = (
                    has((x - 1, y - 1)),
                    has((x, y - 1)),
                    has((x - 1, y)),
                    has((x, y)),
                );
                if sw && ne && !se && !nw {
                    occupied.insert((x, y - 1));
                    changed = true;
                } else if se && nw && !sw && !ne {
                    occupied.insert((x, y));
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// Counter-clockwise corner sequence of a simply connected cell set.
fn trace_boundary(occupied: &HashSet<(i64, i64)>) -> Vec<(i64, i64)> {
    let mut next: HashMap<(i64, i64), (i64, i64)> = HashMap::new();
    for &(x, y) in occupied {
        let has = |c: (i64, i64)| occupied.contains(&c);
        if !has((x, y - 1)) {
            next.insert((x, y), (x + 1, y));
        }
        if !has((x + 1, y)) {
            next.insert((x + 1, y), (x + 1, y + 1));
        }
        if !has((x, y + 1)) {
            next.insert((x + 1, y + 1), (x, y + 1));
        }
        if !has((x - 1, y)) {
            next.insert((x, y + 1), (x, y));
        }
    }
    let start = *next.keys().min().expect("nonempty");
    let mut walk = vec![start];
    let mut p = next[&start];
    while p != start {
        walk.push(p);
        p = next[&p];
    }
    let k = walk.len();
    (0..k)
        .filter(|&i| {
            let (a, b, c) = (walk[(i + k - 1) % k], walk[i], walk[(i + 1) % k]);
            (b.0 - a.0, b.1 - a.1) != (c.0 - b.0, c.1 - b.1)
        })
        .map(|i| walk[i])
        .collect()
}

/// Connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`.
pub fn gen_random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    let tree = gen_random_tree(n, seed)?;
    let mut rng = split_rng(&mut seeded_rng(seed));
    let mut edges: Vec<(Vertex, Vertex)> = tree.edges().to_vec();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("random graph"))
}

/// Connected bipartite graph on `n` vertices: a random 2-coloring with both
/// sides nonempty, a random spanning tree across the sides, and each further
/// cross pair with probability `p`.
pub fn gen_random_connected_bipartite(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    at_least("bipartite graph size", n, 2)?;
    let mut rng = seeded_rng(seed);
    let mut side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    side[0] = false;
    if side.iter().all(|&s| !s) {
        let v = rng.gen_range(1..n);
        side[v] = true;
    }
    let (left, right): (Vec<Vertex>, Vec<Vertex>) = (0..n).partition(|&v| !side[v]);
    // Random spanning tree: attach vertices in random order to an earlier
    // vertex of the opposite side.
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let first_other = order
        .iter()
        .position(|&v| side[v] != side[order[0]])
        .expect("both sides");
    order.swap(1, first_other);
    let mut edges = HashSet::new();
    let mut placed = vec![order[0], order[1]];
    edges.insert((order[0].min(order[1]), order[0].max(order[1])));
    for &v in &order[2..] {
        let opposite: Vec<Vertex> = placed
            .iter()
            .copied()
            .filter(|&u| side[u] != side[v])
            .collect();
        let u = *opposite.choose(&mut rng).expect("both sides are placed");
        edges.insert((u.min(v), u.max(v)));
        placed.push(v);
    }
    for &a in &left {
        for &b in &right {
            if rng.gen_bool(p) {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_unstable();
    Ok(Graph::from_edges(n, &edges).expect("bipartite graph"))
}
