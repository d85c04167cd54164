use std::collections::{HashMap, VecDeque};

use super::Square;
use crate::graph::{EdgeId, Graph, Incidence, Vertex};

const UNSET: u8 = u8::MAX;

/// Links of every vertex, stored implicitly through per-edge square lists.
///
/// A link vertex is a *dart*: an edge seen from one of its endpoints. The
/// dart of edge `e` at its smaller endpoint is `2e`, at the larger `2e + 1`.
/// Two darts at `x` are adjacent when a listed square contains both edges.
#[derive(Debug, Clone)]
pub struct Links {
    squares: Vec<Square>,
    offsets: Vec<usize>,
    by_edge: Vec<usize>,
    color: Vec<u8>,
    components: Vec<u32>,
    bipartite: Vec<bool>,
    odd: Option<(Vertex, Vec<EdgeId>)>,
    /// Position of each graph edge in the per-edge arrays, when they were
    /// built over a renumbered copy; empty means the identity.
    slot: Vec<u32>,
}

/// Explicit link of one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkGraph {
    pub owner: Vertex,
    /// Incident edges of `owner`; position `i` is link vertex `i`.
    pub edges: Vec<EdgeId>,
    /// Sorted, deduplicated neighbor lists over link vertex positions.
    pub adjacency: Vec<Vec<usize>>,
    /// Proper 2-coloring when the link is bipartite.
    pub coloring: Option<Vec<u8>>,
}

impl LinkGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

fn dart_neighbors<'a>(
    squares: &'a [Square],
    offsets: &[usize],
    by_edge: &'a [usize],
    x: Vertex,
    e: EdgeId,
) -> impl Iterator<Item = EdgeId> + 'a {
    by_edge[offsets[e]..offsets[e + 1]]
        .iter()
        .filter_map(move |&s| squares[s].other_edge_at(x, e))
}

fn dart(g: &Graph, slot: usize, e: EdgeId, x: Vertex) -> usize {
    2 * slot + usize::from(g.endpoints(e).1 == x)
}

impl Links {
    fn slot(&self, e: EdgeId) -> usize {
        if self.slot.is_empty() {
            e
        } else {
            self.slot[e] as usize
        }
    }

    /// Squares containing edge `e`, as indices into the square list.
    pub fn squares_of_edge(&self, e: EdgeId) -> &[usize] {
        let k = self.slot(e);
        &self.by_edge[self.offsets[k]..self.offsets[k + 1]]
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    /// Translates links built over a renumbered copy back to graph ids:
    /// `vertex` and `edge` map copy ids to graph ids, `slot` is the inverse
    /// edge map.
    pub(super) fn renamed(mut self, vertex: &[u32], edge: &[u32], slot: Vec<u32>) -> Links {
        for s in &mut self.squares {
            s.vertices = s.vertices.map(|v| vertex[v] as Vertex);
            s.edges = s.edges.map(|e| edge[e] as EdgeId);
        }
        let n = vertex.len();
        let mut components = vec![0u32; n];
        let mut bipartite = vec![true; n];
        for (x, &v) in vertex.iter().enumerate() {
            components[v as usize] = self.components[x];
            bipartite[v as usize] = self.bipartite[x];
        }
        self.components = components;
        self.bipartite = bipartite;
        if let Some((x, cycle)) = &mut self.odd {
            *x = vertex[*x] as Vertex;
            for e in cycle.iter_mut() {
                *e = edge[*e] as EdgeId;
            }
        }
        self.slot = slot;
        self
    }

    pub fn into_squares(self) -> Vec<Square> {
        self.squares
    }

    fn dart_neighbors(&self, x: Vertex, e: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
        self.squares_of_edge(e)
            .iter()
            .filter_map(move |&s| self.squares[s].other_edge_at(x, e))
    }

    pub fn is_bipartite(&self, x: Vertex) -> bool {
        self.bipartite[x]
    }

    /// Number of connected components of `Link(x)`.
    pub fn component_count(&self, x: Vertex) -> usize {
        self.components[x] as usize
    }

    /// First vertex (by id) whose link has an odd cycle, with the cycle as a
    /// sequence of incident edges.
    pub fn odd_cycle(&self) -> Option<(Vertex, &[EdgeId])> {
        self.odd.as_ref().map(|(v, c)| (*v, c.as_slice()))
    }

    pub fn link(&self, g: &Graph, x: Vertex) -> LinkGraph {
        let edges: Vec<EdgeId> = g.neighbors(x).iter().map(|&(_, e)| e).collect();
        let index: HashMap<EdgeId, usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let adjacency = edges
            .iter()
            .map(|&e| {
                let mut nbrs: Vec<usize> = self.dart_neighbors(x, e).map(|f| index[&f]).collect();
                nbrs.sort_unstable();
                nbrs.dedup();
                nbrs
            })
            .collect();
        let coloring = self.is_bipartite(x).then(|| {
            edges
                .iter()
                .map(|&e| self.color[dart(g, self.slot(e), e, x)])
                .collect()
        });
        LinkGraph {
            owner: x,
            edges,
            adjacency,
            coloring,
        }
    }
}

/// Builds every vertex link from `squares` and attempts to 2-color each one.
/// Work is linear in `|E|` plus the number of squares.
pub fn build_links(g: &Graph, squares: Vec<Square>) -> Links {
    build_links_with(
        g.vertex_count(),
        g.edge_count(),
        squares,
        |v| g.neighbors(v),
        |v| v,
    )
}

/// [`build_links`] over an arbitrary adjacency whose vertices are renamed to
/// graph ids by `name`; dart sides and the choice of odd vertex follow the
/// graph ids, while per-vertex results stay indexed by adjacency vertex.
pub(super) fn build_links_with<'a, I: Incidence + 'a>(
    n: usize,
    m: usize,
    squares: Vec<Square>,
    neighbors: impl Fn(Vertex) -> &'a [I],
    name: impl Fn(Vertex) -> Vertex,
) -> Links {
    let mut offsets = vec![0usize; m + 1];
    for s in &squares {
        for &e in &s.edges {
            offsets[e + 1] += 1;
        }
    }
    for e in 0..m {
        offsets[e + 1] += offsets[e];
    }
    let mut by_edge = vec![0usize; offsets[m]];
    for (i, s) in squares.iter().enumerate() {
        for &e in &s.edges {
            by_edge[offsets[e]] = i;
            offsets[e] += 1;
        }
    }
    offsets.copy_within(0..m, 1);
    offsets[0] = 0;
    let mut color = vec![UNSET; 2 * m];
    let mut component_counts = vec![0u32; n];
    let mut bipartite = vec![true; n];
    let mut stack = Vec::new();
    for x in 0..n {
        let mut components = 0;
        let mut conflict = false;
        let named = name(x);
        for &a in neighbors(x) {
            let (w, start) = (a.vertex(), a.edge());
            let sd = 2 * start + usize::from(named > name(w));
            if color[sd] != UNSET {
                continue;
            }
            components += 1;
            color[sd] = 0;
            stack.push((start, sd));
            while let Some((e, de)) = stack.pop() {
                for &s in &by_edge[offsets[e]..offsets[e + 1]] {
                    let Some((f, far)) = turn(&squares[s], x, e) else {
                        continue;
                    };
                    let df = 2 * f + usize::from(named > name(far));
                    if color[df] == UNSET {
                        color[df] = 1 - color[de];
                        stack.push((f, df));
                    } else if color[df] == color[de] {
                        conflict = true;
                    }
                }
            }
        }
        component_counts[x] = components;
        bipartite[x] = !conflict;
    }
    let odd = (0..n)
        .filter(|&x| !bipartite[x])
        .min_by_key(|&x| name(x))
        .map(|x| {
            (
                x,
                odd_link_cycle(neighbors(x), &squares, &offsets, &by_edge, x),
            )
        });
    Links {
        squares,
        offsets,
        by_edge,
        color,
        components: component_counts,
        bipartite,
        odd,
        slot: Vec::new(),
    }
}

/// The side of `s` meeting `e` at corner `x`, with its endpoint other than `x`.
fn turn(s: &Square, x: Vertex, e: EdgeId) -> Option<(EdgeId, Vertex)> {
    let i = s.corner_index(x)?;
    let (a, b) = s.edges_at(i);
    if a == e {
        Some((b, s.vertices[(i + 1) % 4]))
    } else if b == e {
        Some((a, s.vertices[(i + 3) % 4]))
    } else {
        None
    }
}

/// Breadth-first 2-coloring of `Link(x)` closing the first monochromatic
/// link edge into an odd cycle of incident edges.
fn odd_link_cycle<I: Incidence>(
    incident: &[I],
    squares: &[Square],
    offsets: &[usize],
    by_edge: &[usize],
    x: Vertex,
) -> Vec<EdgeId> {
    let edges: Vec<EdgeId> = incident.iter().map(|a| a.edge()).collect();
    let index: HashMap<EdgeId, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let k = edges.len();
    let mut color = vec![UNSET; k];
    let mut parent = vec![usize::MAX; k];
    let mut depth = vec![0usize; k];
    let mut queue = VecDeque::new();
    for s in 0..k {
        if color[s] != UNSET {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(a) = queue.pop_front() {
            for f in dart_neighbors(squares, offsets, by_edge, x, edges[a]) {
                let b = index[&f];
                if color[b] == UNSET {
                    color[b] = 1 - color[a];
                    parent[b] = a;
                    depth[b] = depth[a] + 1;
                    queue.push_back(b);
                } else if color[b] == color[a] {
                    return tree_cycle(a, b, &parent, &depth)
                        .into_iter()
                        .map(|i| edges[i])
                        .collect();
                }
            }
        }
    }
    unreachable!("link of {x} was found to have an odd cycle")
}

fn tree_cycle(a: usize, b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
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
    left
}

/// True when every vertex link is connected. For a partial double tree with
/// at least three vertices this is equivalent to 2-connectivity.
pub fn links_all_connected(links: &Links) -> bool {
    links.components.iter().all(|&c| c <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cogwheel, gen_cycle, gen_path};
    use crate::graph::lexbfs;
    use crate::recognition::list_squares;

    fn links_of(g: &Graph) -> Links {
        let o = lexbfs(g, 0).unwrap();
        build_links(g, list_squares(g, &o))
    }

    #[test]
    fn even_cogwheel_hub_link_is_a_four_cycle() {
        let g = cogwheel(4).unwrap();
        let links = links_of(&g);
        let hub = links.link(&g, 0);
        assert_eq!(hub.edges.len(), 4);
        assert_eq!(hub.edge_count(), 4);
        assert!(hub.adjacency.iter().all(|a| a.len() == 2));
        let colors = hub.coloring.expect("bipartite");
        for (i, nbrs) in hub.adjacency.iter().enumerate() {
            assert!(nbrs.iter().all(|&j| colors[j] != colors[i]));
        }
        assert!(links.odd_cycle().is_none());
    }

    #[test]
    fn odd_cogwheel_hub_link_is_a_five_cycle() {
        let g = cogwheel(5).unwrap();
        let links = links_of(&g);
        assert_eq!(links.squares().len(), 5);
        let hub = links.link(&g, 0);
        assert_eq!(hub.edge_count(), 5);
        assert!(hub.coloring.is_none());
        let (v, cycle) = links.odd_cycle().unwrap();
        assert_eq!(v, 0);
        assert_eq!(cycle.len(), 5);
    }

    #[test]
    fn leaf_link_is_a_single_vertex() {
        let g = gen_path(3).unwrap();
        let links = links_of(&g);
        let leaf = links.link(&g, 0);
        assert_eq!(leaf.edges.len(), 1);
        assert_eq!(leaf.coloring, Some(vec![0]));
        assert_eq!(links.component_count(1), 2);
        assert!(!links_all_connected(&links));
    }

    #[test]
    fn connectivity_of_links() {
        assert!(links_all_connected(&links_of(&gen_cycle(4).unwrap())));
        let glued = Graph::from_edges(
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
        let links = links_of(&glued);
        assert_eq!(links.component_count(0), 2);
        assert!(!links_all_connected(&links));
    }
}
