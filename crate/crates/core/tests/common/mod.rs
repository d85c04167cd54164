#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use ramified::generators::{gen_random_connected_bipartite, seeded_rng};
use ramified::graph::{is_bipartite, is_connected, Graph, GraphBuilder, Vertex};
use ramified::reference::reference_recognizer;

/// Every connected labeled graph on `n` vertices, by edge mask over the
/// pairs `(u, v)` with `u < v`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_where(n, |_| true)
}

/// The connected labeled graphs on `n` vertices satisfying `keep`.
pub fn connected_graphs_where(n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        if n > 1 && (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if is_connected(&g) && keep(&g) {
            out.push(g);
        }
    }
    out
}

/// Connected graphs on 1 to `max_n` vertices.
pub fn small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// Partial double trees among the connected graphs on 1 to `max_n`
/// vertices, by the definitional recognizer.
pub fn small_yes_instances(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| {
            connected_graphs_where(n, |g| is_bipartite(g).is_ok() && reference_recognizer(g))
        })
        .collect()
}

/// `g` with vertices renamed by a random permutation fixing 0, and edges
/// inserted in random order. Returns the graph and the vertex map.
pub fn shuffled(g: &Graph, seed: u64) -> (Graph, Vec<Vertex>) {
    let mut rng = seeded_rng(seed);
    let n = g.vertex_count();
    let mut p: Vec<Vertex> = (0..n).collect();
    if n > 1 {
        p[1..].shuffle(&mut rng);
    }
    let mut ids: Vec<usize> = (0..g.edge_count()).collect();
    ids.shuffle(&mut rng);
    let mut b = GraphBuilder::new(n);
    for e in ids {
        let (u, v) = g.endpoints(e);
        if g.is_weighted() {
            b.add_weighted_edge(p[u], p[v], g.length(e)).unwrap();
        } else {
            b.add_edge(p[u], p[v]).unwrap();
        }
    }
    (b.build(), p)
}

/// Random connected bipartite graph on 7 to 9 vertices.
pub fn random_bipartite(seed: u64) -> Graph {
    let mut rng = seeded_rng(seed ^ 0x5eed);
    let n = rng.gen_range(7..=9);
    let p = rng.gen_range(0.0..0.35);
    gen_random_connected_bipartite(n, p, seed).unwrap()
}

/// Naive LexBFS from vertex 0 with full labels: the unnumbered vertex with
/// the lexicographically largest label is numbered next, smallest id first
/// on ties.
pub fn naive_lexbfs(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for i in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .fold(None, |best: Option<Vertex>, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .unwrap();
        let v = if i == 0 { 0 } else { v };
        done[v] = true;
        order.push(v);
        for &(w, _) in g.neighbors(v) {
            if !done[w] {
                labels[w].push(n - i);
            }
        }
    }
    order
}
