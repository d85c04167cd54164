use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::{Graph, Vertex};

/// Distance reported for unreachable vertices.
pub const INFINITE: u64 = u64::MAX;

/// Shortest-path distances from `source`: breadth-first search on unit
/// graphs, Dijkstra on weighted ones.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<u64> {
    let mut dist = vec![INFINITE; g.vertex_count()];
    dist[source] = 0;
    if !g.is_weighted() {
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in g.neighbors(v) {
                if dist[w] == INFINITE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }
    let mut heap = BinaryHeap::from([Reverse((0u64, source))]);
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &(w, e) in g.neighbors(v) {
            let nd = d + g.length(e);
            if nd < dist[w] {
                dist[w] = nd;
                heap.push(Reverse((nd, w)));
            }
        }
    }
    dist
}

/// Component label per vertex, numbered in order of smallest member.
pub fn components(g: &Graph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.vertex_count()];
    let mut next = 0;
    let mut stack = Vec::new();
    for s in g.vertices() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// True for graphs with exactly one component. The empty graph is not connected.
pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() > 0 && components(g).iter().all(|&c| c == 0)
}

/// Odd closed walk certifying non-bipartiteness: consecutive vertices are
/// adjacent, as are the last and the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub vertices: Vec<Vertex>,
}

impl OddCycle {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        k % 2 == 1
            && self.vertices.iter().all(|&v| v < g.vertex_count())
            && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Two-coloring (0/1 per vertex) or an odd cycle.
pub fn is_bipartite(g: &Graph) -> Result<Vec<u8>, OddCycle> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return Err(tree_cycle(v, w, &parent, &depth));
                }
            }
        }
    }
    Ok(color)
}

/// Closes the BFS-tree paths from `a` and `b` to their common ancestor.
fn tree_cycle(a: Vertex, b: Vertex, parent: &[usize], depth: &[usize]) -> OddCycle {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    OddCycle { vertices: left }
}

/// Cut vertices, in increasing order (iterative Hopcroft-Tarjan).
pub fn articulation_points(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, p, ref mut i)) = stack.last_mut() {
            if let Some(&(w, _)) = g.neighbors(v).get(*i) {
                *i += 1;
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != p {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if p != usize::MAX {
                    low[p] = low[p].min(low[v]);
                    if p != root && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    g.vertices().filter(|&v| is_cut[v]).collect()
}

/// Connected with no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    is_connected(g) && articulation_points(g).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn distances_on_small_graphs() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(bfs_distances(&path, 0), vec![0, 1, 2]);
        assert_eq!(bfs_distances(&cycle(4), 0), vec![0, 1, 2, 1]);
        let w = Graph::from_weighted_edges(2, &[(0, 1, 5)]).unwrap();
        assert_eq!(bfs_distances(&w, 0), vec![0, 5]);
        let split = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(bfs_distances(&split, 0)[2], INFINITE);
    }

    #[test]
    fn weighted_distances_take_the_cheaper_route() {
        let g =
            Graph::from_weighted_edges(4, &[(0, 1, 10), (0, 2, 1), (2, 3, 1), (3, 1, 1)]).unwrap();
        assert_eq!(bfs_distances(&g, 0), vec![0, 3, 1, 2]);
    }

    #[test]
    fn bipartiteness_certificates() {
        let c = is_bipartite(&cycle(4)).unwrap();
        assert_eq!(c, vec![0, 1, 0, 1]);
        let odd = is_bipartite(&cycle(5)).unwrap_err();
        assert!(odd.is_valid_for(&cycle(5)));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(is_bipartite(&k4).unwrap_err().vertices.len(), 3);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&cycle(4)));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected(&two));
        assert_eq!(components(&two), vec![0, 0, 1, 1]);
        assert!(!is_connected(&Graph::empty(0)));
        assert!(is_connected(&Graph::empty(1)));
    }

    #[test]
    fn cut_vertices() {
        assert!(articulation_points(&cycle(6)).is_empty());
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(articulation_points(&path), vec![1, 2]);
        let bowtie = Graph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (5, 6),
                (6, 0),
            ],
        )
        .unwrap();
        assert_eq!(articulation_points(&bowtie), vec![0]);
        assert!(!is_biconnected(&bowtie));
    }
}
