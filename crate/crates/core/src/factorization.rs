//! Splitting a partial double tree into its two tree factors.
//!
//! Opposite edges of every square are merged into Θ-classes; two classes
//! meeting in a square must get different colors, and contracting all edges
//! of the other color turns `G` into the tree factor of a color.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::graph::{bfs_distances, EdgeId, Graph, GraphBuilder, Vertex};
use crate::recognition::{recognize, RecognitionReport, Square, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("not a partial double tree: {}", .0.kind())]
    NotPartialDoubleTree(Witness),
    #[error("Θ-class {class} contains edges of different lengths (edge {edge})")]
    WeightMismatch { class: usize, edge: EdgeId },
    #[error("internal defect: the class graph has an odd cycle through class {class}")]
    OddClassCycle { class: usize },
    #[error("internal defect: factor {factor} is not a tree after contraction")]
    NotATree { factor: u8 },
    #[error("internal defect: vertices {0} and {1} share both coordinates")]
    NotInjective(Vertex, Vertex),
}

/// Θ-classes of the edges, numbered in order of their smallest edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    pub class_of: Vec<usize>,
    /// Smallest edge of each class.
    pub representative: Vec<EdgeId>,
    /// Common length of the edges of each class.
    pub length: Vec<u64>,
}

impl ThetaPartition {
    pub fn class_count(&self) -> usize {
        self.representative.len()
    }
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

/// Closes "opposite in a listed square" transitively with a disjoint-set
/// forest over edges.
pub fn theta_classes(g: &Graph, squares: &[Square]) -> Result<ThetaPartition, FactorError> {
    let m = g.edge_count();
    let mut dsu = Dsu((0..m).collect());
    for s in squares {
        dsu.union(s.edges[0], s.edges[2]);
        dsu.union(s.edges[1], s.edges[3]);
    }
    // Roots are the smallest members, so first-seen order is smallest-edge order.
    let mut class_of = vec![usize::MAX; m];
    let mut representative = Vec::new();
    let mut length = Vec::new();
    let mut class_of_root = vec![usize::MAX; m];
    for (e, slot) in class_of.iter_mut().enumerate() {
        let r = dsu.find(e);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = representative.len();
            representative.push(e);
            length.push(g.length(e));
        }
        let c = class_of_root[r];
        if g.length(e) != length[c] {
            return Err(FactorError::WeightMismatch { class: c, edge: e });
        }
        *slot = c;
    }
    Ok(ThetaPartition {
        class_of,
        representative,
        length,
    })
}

/// Which tree factor a class belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    First = 1,
    Second = 2,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::First => Color::Second,
            Color::Second => Color::First,
        }
    }

    pub fn index(self) -> usize {
        self as usize - 1
    }
}

/// Classes as vertices, one edge per square joining its two classes.
#[derive(Debug, Clone)]
pub struct ClassGraph {
    pub adjacency: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl ClassGraph {
    pub fn new(partition: &ThetaPartition, squares: &[Square]) -> Self {
        let mut adjacency = vec![Vec::new(); partition.class_count()];
        let mut edges = Vec::with_capacity(squares.len());
        for s in squares {
            let (a, b) = (
                partition.class_of[s.edges[0]],
                partition.class_of[s.edges[1]],
            );
            adjacency[a].push(b);
            adjacency[b].push(a);
            edges.push((a, b));
        }
        ClassGraph { adjacency, edges }
    }
}

/// Breadth-first 2-coloring of the class graph, components in order of
/// their smallest class, each starting with [`Color::First`].
pub fn two_color_classes(cg: &ClassGraph) -> Result<Vec<Color>, FactorError> {
    let k = cg.adjacency.len();
    let mut color: Vec<Option<Color>> = vec![None; k];
    let mut queue = VecDeque::new();
    for start in 0..k {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(Color::First);
        queue.push_back(start);
        while let Some(c) = queue.pop_front() {
            let here = color[c].expect("colored");
            for &d in &cg.adjacency[c] {
                match color[d] {
                    None => {
                        color[d] = Some(here.other());
                        queue.push_back(d);
                    }
                    Some(x) if x == here => return Err(FactorError::OddClassCycle { class: d }),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.expect("colored")).collect())
}

/// Contracts every edge whose class is not `color`. Tree vertices are the
/// contracted components numbered by smallest `G`-vertex; tree edges follow
/// class order. Returns the tree and the coordinate of every `G`-vertex.
pub fn extract_tree(
    g: &Graph,
    partition: &ThetaPartition,
    coloring: &[Color],
    color: Color,
) -> Result<(Graph, Vec<Vertex>), FactorError> {
    let defect = FactorError::NotATree {
        factor: color as u8,
    };
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &(w, e) in g.neighbors(v) {
                if coloring[partition.class_of[e]] != color && comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }

    let mut class_edge: BTreeMap<usize, (Vertex, Vertex)> = BTreeMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let c = partition.class_of[e];
        if coloring[c] != color {
            continue;
        }
        let key = (comp[u].min(comp[v]), comp[u].max(comp[v]));
        if key.0 == key.1 {
            return Err(defect);
        }
        if *class_edge.entry(c).or_insert(key) != key {
            return Err(defect);
        }
    }
    if class_edge.len() + 1 != count {
        return Err(defect);
    }
    let mut builder = GraphBuilder::new(count);
    for (&c, &(a, b)) in &class_edge {
        let added = if g.is_weighted() {
            builder.add_weighted_edge(a, b, partition.length[c])
        } else {
            builder.add_edge(a, b)
        };
        added.map_err(|_| defect.clone())?;
    }
    Ok((builder.build(), comp))
}

/// `G` as a median subgraph of `T1 □ T2`.
#[derive(Debug, Clone)]
pub struct TwoTreeEmbedding {
    pub trees: [Graph; 2],
    /// `coords[i][v]` is the vertex of `trees[i]` that `v` maps to.
    pub coords: [Vec<Vertex>; 2],
    pub partition: ThetaPartition,
    pub coloring: Vec<Color>,
    pub squares: Vec<Square>,
    tree_edge: Vec<EdgeId>,
    inverse: HashMap<(Vertex, Vertex), Vertex>,
}

impl TwoTreeEmbedding {
    pub fn coordinate(&self, v: Vertex) -> (Vertex, Vertex) {
        (self.coords[0][v], self.coords[1][v])
    }

    pub fn vertex_at(&self, t1: Vertex, t2: Vertex) -> Option<Vertex> {
        self.inverse.get(&(t1, t2)).copied()
    }

    pub fn edge_color(&self, e: EdgeId) -> Color {
        self.coloring[self.partition.class_of[e]]
    }

    /// Edge of the tree of the class's color that class `c` contracts to.
    pub fn tree_edge_of_class(&self, c: usize) -> EdgeId {
        self.tree_edge[c]
    }
}

/// Recognition, Θ-classes, class coloring and both contractions.
pub fn embed(g: &Graph) -> Result<TwoTreeEmbedding, FactorError> {
    let cert = match recognize(g) {
        RecognitionReport::Yes(cert) => cert,
        RecognitionReport::No(w) => return Err(FactorError::NotPartialDoubleTree(w)),
    };
    let partition = theta_classes(g, cert.squares())?;
    let coloring = two_color_classes(&ClassGraph::new(&partition, cert.squares()))?;
    let (t1, c1) = extract_tree(g, &partition, &coloring, Color::First)?;
    let (t2, c2) = extract_tree(g, &partition, &coloring, Color::Second)?;
    let mut inverse = HashMap::with_capacity(g.vertex_count());
    for v in g.vertices() {
        if let Some(u) = inverse.insert((c1[v], c2[v]), v) {
            return Err(FactorError::NotInjective(u, v));
        }
    }
    // Tree edges are numbered in class order within each color.
    let mut seen = [0usize; 2];
    let tree_edge = coloring
        .iter()
        .map(|c| {
            seen[c.index()] += 1;
            seen[c.index()] - 1
        })
        .collect();
    Ok(TwoTreeEmbedding {
        trees: [t1, t2],
        coords: [c1, c2],
        partition,
        coloring,
        squares: cert.links.into_squares(),
        tree_edge,
        inverse,
    })
}

pub enum Pairs<'a> {
    All,
    List(&'a [(Vertex, Vertex)]),
}

/// Checks `d_G(u,v) = d_T1(c1 u, c1 v) + d_T2(c2 u, c2 v)` exactly on the
/// given pairs, with one search per distinct source.
pub fn verify_isometry(e: &TwoTreeEmbedding, g: &Graph, pairs: Pairs<'_>) -> bool {
    let mut by_source: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    match pairs {
        Pairs::All => {
            for u in g.vertices() {
                by_source.insert(u, g.vertices().collect());
            }
        }
        Pairs::List(list) => {
            for &(u, v) in list {
                by_source.entry(u).or_default().push(v);
            }
        }
    }
    by_source.into_iter().all(|(u, targets)| {
        let dg = bfs_distances(g, u);
        let d1 = bfs_distances(&e.trees[0], e.coords[0][u]);
        let d2 = bfs_distances(&e.trees[1], e.coords[1][u]);
        targets
            .iter()
            .all(|&v| dg[v] == d1[e.coords[0][v]].saturating_add(d2[e.coords[1][v]]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cogwheel, gen_cycle, gen_grid, gen_path, gen_random_tree};
    use crate::graph::is_connected;
    use crate::reference::theta_by_distance;

    #[test]
    fn four_cycle() {
        let g = gen_cycle(4).unwrap();
        let e = embed(&g).unwrap();
        assert_eq!(e.partition.class_count(), 2);
        assert_eq!(e.coloring, vec![Color::First, Color::Second]);
        for t in &e.trees {
            assert_eq!((t.vertex_count(), t.edge_count()), (2, 1));
        }
        assert!(verify_isometry(&e, &g, Pairs::All));
    }

    #[test]
    fn trees_factor_as_themselves() {
        let t = gen_random_tree(20, 11).unwrap();
        let e = embed(&t).unwrap();
        assert_eq!(e.partition.class_count(), 19);
        assert!(e.coloring.iter().all(|&c| c == Color::First));
        assert_eq!(e.trees[0].vertex_count(), 20);
        assert_eq!(e.trees[1].vertex_count(), 1);
        let edge = embed(&gen_path(2).unwrap()).unwrap();
        assert_eq!(edge.trees[0].edge_count(), 1);
        assert_eq!(edge.trees[1].vertex_count(), 1);
    }

    #[test]
    fn grid_factors_are_paths() {
        let g = gen_grid(3, 3).unwrap();
        let e = embed(&g).unwrap();
        assert_eq!(e.partition.class_count(), 4);
        let classes = theta_by_distance(&g);
        assert_eq!(classes, e.partition.class_of);
        for t in &e.trees {
            assert_eq!((t.vertex_count(), t.edge_count()), (3, 2));
            assert!(t.vertices().all(|v| t.degree(v) <= 2));
        }
        assert!(verify_isometry(&e, &g, Pairs::All));
    }

    #[test]
    fn cogwheel_classes_alternate_around_the_hub() {
        let g = cogwheel(4).unwrap();
        let e = embed(&g).unwrap();
        assert!(verify_isometry(&e, &g, Pairs::All));
        let mut spokes: Vec<(Vertex, Color)> = g
            .neighbors(0)
            .iter()
            .map(|&(w, edge)| (w, e.edge_color(edge)))
            .collect();
        spokes.sort_unstable();
        // singletons 1..=4 in cycle order 1-2-3-4
        let colors: Vec<Color> = spokes.iter().map(|s| s.1).collect();
        assert!((0..4).all(|i| colors[i] != colors[(i + 1) % 4]));
        for t in &e.trees {
            assert!(is_connected(t));
            assert_eq!(t.edge_count() + 1, t.vertex_count());
        }
    }

    #[test]
    fn odd_cogwheel_is_refused() {
        assert!(matches!(
            embed(&cogwheel(5).unwrap()),
            Err(FactorError::NotPartialDoubleTree(_))
        ));
    }

    #[test]
    fn corrupted_coordinates_are_caught() {
        let g = gen_grid(4, 4).unwrap();
        let mut e = embed(&g).unwrap();
        let (t1, _) = e.coordinate(0);
        let other = (0..e.trees[0].vertex_count()).find(|&x| x != t1).unwrap();
        e.coords[0][0] = other;
        assert!(!verify_isometry(&e, &g, Pairs::All));
    }

    #[test]
    fn inverse_lookup() {
        let g = gen_grid(5, 6).unwrap();
        let e = embed(&g).unwrap();
        for v in g.vertices() {
            let (a, b) = e.coordinate(v);
            assert_eq!(e.vertex_at(a, b), Some(v));
        }
    }

    #[test]
    fn weight_mismatch_is_reported() {
        let g =
            Graph::from_weighted_edges(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 3), (3, 0, 1)]).unwrap();
        assert!(matches!(embed(&g), Err(FactorError::WeightMismatch { .. })));
    }

    #[test]
    fn class_graph_two_coloring_detects_odd_cycles() {
        let cg = ClassGraph {
            adjacency: vec![vec![1, 2], vec![0, 2], vec![0, 1]],
            edges: vec![(0, 1), (1, 2), (0, 2)],
        };
        assert!(matches!(
            two_color_classes(&cg),
            Err(FactorError::OddClassCycle { .. })
        ));
    }
}
