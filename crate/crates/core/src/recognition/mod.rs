//! Linear-time recognition of partial double trees.
//!
//! The pipeline runs in four stages and stops at the first failure:
//!
//! 1. connectivity and bipartiteness;
//! 2. a LexBFS ordering whose labels must describe a strongly dismantlable
//!    graph: every label has at most two entries, a two-entry label `(y, z)`
//!    has `|L(y) ∩ L(z)| = 1`, and no two consecutive vertices carry the same
//!    two-entry label;
//! 3. one square per two-entry label, which under the previous checks is the
//!    complete list of 4-cycles;
//! 4. every vertex link (incident edges, adjacent when they span a listed
//!    square) must be bipartite.
//!
//! A `Yes` carries the ordering, squares and links as a certificate for the
//! factorization step; a `No` carries a [`Witness`] that can be re-checked
//! against the input graph.

mod labels;
mod links;
mod square;

pub use labels::check_labels;
pub use links::{build_links, links_all_connected, LinkGraph, Links};
pub use square::{list_squares, Square};

use labels::check_label_order;
use links::build_links_with;
use square::squares_from_labels;

use crate::graph::{
    bfs_distances, bfs_order, is_bipartite, lexbfs, lexbfs_with, EdgeId, Graph, Label, LexBfsOrder,
    OddCycle, Vertex, INFINITE,
};

/// Which search order feeds the label checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderingMode {
    /// LexBFS; equal two-entry labels are adjacent in the order, so only
    /// consecutive vertices are compared.
    #[default]
    LexBfs,
    /// Plain BFS; all two-entry labels are compared globally.
    Bfs,
}

impl OrderingMode {
    pub fn order(self, g: &Graph) -> Option<LexBfsOrder> {
        match self {
            OrderingMode::LexBfs => lexbfs(g, 0).ok(),
            OrderingMode::Bfs => bfs_order(g, 0).ok(),
        }
    }
}

/// Reason a graph was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `unreached` is a vertex not reachable from vertex 0; `None` for the
    /// empty graph.
    NotConnected {
        unreached: Option<Vertex>,
    },
    NotBipartite {
        cycle: Vec<Vertex>,
    },
    /// `vertex` has at least three earlier-numbered neighbors, the first
    /// three of which are listed.
    LabelTooLarge {
        vertex: Vertex,
        label: [Vertex; 3],
    },
    /// `L(vertex) = (y, z)` but `|L(y) ∩ L(z)| = size ≠ 1`.
    BadLabelIntersection {
        vertex: Vertex,
        y: Vertex,
        z: Vertex,
        size: usize,
    },
    /// Two vertices adjacent in the LexBFS order with the same two-entry label.
    ConsecutiveEqualLabels {
        first: Vertex,
        second: Vertex,
    },
    /// Two vertices anywhere in a BFS order with the same two-entry label.
    DuplicateLabels {
        first: Vertex,
        second: Vertex,
    },
    /// Odd cycle in the link of `vertex`, as the sequence of incident edges.
    OddLinkCycle {
        vertex: Vertex,
        edges: Vec<EdgeId>,
    },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::NotConnected { .. } => "NotConnected",
            Witness::NotBipartite { .. } => "NotBipartite",
            Witness::LabelTooLarge { .. } => "LabelTooLarge",
            Witness::BadLabelIntersection { .. } => "BadLabelIntersection",
            Witness::ConsecutiveEqualLabels { .. } => "ConsecutiveEqualLabels",
            Witness::DuplicateLabels { .. } => "DuplicateLabels",
            Witness::OddLinkCycle { .. } => "OddLinkCycle",
        }
    }

    /// Re-checks the witness against `g` using the default LexBFS ordering.
    pub fn verify(&self, g: &Graph) -> bool {
        self.verify_with(g, OrderingMode::LexBfs)
    }

    /// Re-checks the witness; order-dependent witnesses recompute the
    /// (deterministic) ordering of `mode`.
    pub fn verify_with(&self, g: &Graph, mode: OrderingMode) -> bool {
        let n = g.vertex_count();
        match self {
            Witness::NotConnected { unreached: None } => n == 0,
            Witness::NotConnected { unreached: Some(v) } => {
                *v < n && bfs_distances(g, 0)[*v] == INFINITE
            }
            Witness::NotBipartite { cycle } => OddCycle {
                vertices: cycle.clone(),
            }
            .is_valid_for(g),
            Witness::OddLinkCycle { vertex, edges } => odd_link_cycle_is_valid(g, *vertex, edges),
            Witness::LabelTooLarge { vertex, label } => {
                let Some(o) = mode.order(g) else { return false };
                *vertex < n
                    && label
                        .iter()
                        .all(|&u| g.has_edge(u, *vertex) && o.number[u] < o.number[*vertex])
                    && label[0] != label[1]
                    && label[1] != label[2]
                    && label[0] != label[2]
            }
            Witness::BadLabelIntersection { vertex, y, z, size } => {
                let Some(o) = mode.order(g) else { return false };
                *vertex < n
                    && o.label(*vertex).vertices() == [*y, *z]
                    && labels::intersection_size(&o, *y, *z) == *size
                    && *size != 1
            }
            Witness::ConsecutiveEqualLabels { first, second } => {
                let Some(o) = mode.order(g) else { return false };
                *first < n
                    && *second < n
                    && o.number[*second] == o.number[*first] + 1
                    && o.label(*first).len() == 2
                    && o.label(*first).vertices() == o.label(*second).vertices()
            }
            Witness::DuplicateLabels { first, second } => {
                let Some(o) = mode.order(g) else { return false };
                *first < n
                    && *second < n
                    && first != second
                    && o.label(*first).len() == 2
                    && o.label(*first).vertices() == o.label(*second).vertices()
            }
        }
    }
}

fn odd_link_cycle_is_valid(g: &Graph, x: Vertex, edges: &[EdgeId]) -> bool {
    let k = edges.len();
    if x >= g.vertex_count()
        || k < 3
        || k.is_multiple_of(2)
        || edges.iter().any(|&e| e >= g.edge_count())
    {
        return false;
    }
    let far = |e: EdgeId| {
        let (a, b) = g.endpoints(e);
        if a == x {
            Some(b)
        } else if b == x {
            Some(a)
        } else {
            None
        }
    };
    let Some(ends) = edges.iter().map(|&e| far(e)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    let mut sorted = ends.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| {
        let (a, b) = (ends[i], ends[(i + 1) % k]);
        let (small, large) = if g.degree(a) <= g.degree(b) {
            (a, b)
        } else {
            (b, a)
        };
        g.neighbors(small)
            .iter()
            .any(|&(w, _)| w != x && g.has_edge(w, large))
    })
}

/// Everything the factorization needs from a successful recognition.
#[derive(Debug, Clone)]
pub struct Certificate {
    /// Links of every vertex; also owns the square list.
    pub links: Links,
    local: Local,
    local_order: LexBfsOrder,
}

impl Certificate {
    /// The search order the labels were read from, in graph ids.
    pub fn order(&self) -> LexBfsOrder {
        self.local.rename_order(&self.local_order)
    }

    pub fn squares(&self) -> &[Square] {
        self.links.squares()
    }
}

#[derive(Debug, Clone)]
pub enum RecognitionReport {
    Yes(Box<Certificate>),
    No(Witness),
}

impl RecognitionReport {
    pub fn is_yes(&self) -> bool {
        matches!(self, RecognitionReport::Yes(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            RecognitionReport::Yes(_) => None,
            RecognitionReport::No(w) => Some(w),
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            RecognitionReport::Yes(c) => Some(c.as_ref()),
            RecognitionReport::No(_) => None,
        }
    }
}

/// Decides whether `g` is a partial double tree in `O(|V| + |E|)` time.
pub fn recognize(g: &Graph) -> RecognitionReport {
    recognize_with(g, OrderingMode::LexBfs)
}

pub fn recognize_with(g: &Graph, mode: OrderingMode) -> RecognitionReport {
    match run(g, mode) {
        Ok(cert) => RecognitionReport::Yes(Box::new(cert)),
        Err(w) => RecognitionReport::No(w),
    }
}

fn run(g: &Graph, mode: OrderingMode) -> Result<Certificate, Witness> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Witness::NotConnected { unreached: None });
    }
    let local = Local::new(g)?;
    let order = match mode {
        OrderingMode::LexBfs => lexbfs_with(n, 0, local.rank.iter().map(|&r| r as Vertex), |v| {
            local.neighbors(v)
        }),
        OrderingMode::Bfs => {
            LexBfsOrder::from_order_with(n, (0..n).collect(), |v| local.neighbors(v))
        }
    }
    .expect("connected graph has a search order");
    check_label_order(&order, mode).map_err(|w| w.renamed(&local.perm))?;
    let squares = squares_from_labels(&order);
    let links = build_links_with(
        n,
        g.edge_count(),
        squares,
        |v| local.neighbors(v),
        |v| local.perm[v] as Vertex,
    );
    let slot = local.edge_slots();
    let links = links.renamed(&local.perm, &local.edge_input, slot);
    if let Some((vertex, edges)) = links.odd_cycle() {
        return Err(Witness::OddLinkCycle {
            vertex,
            edges: edges.to_vec(),
        });
    }
    Ok(Certificate {
        links,
        local,
        local_order: order,
    })
}

/// The input renumbered in breadth-first order from vertex 0, vertices and
/// edges alike, so that the later stages touch memory in search order. Each
/// adjacency row keeps the input's neighbor order, which preserves every
/// tie-break by input id.
#[derive(Debug, Clone)]
struct Local {
    /// Input id of each local vertex.
    perm: Vec<u32>,
    /// Local id of each input vertex.
    rank: Vec<u32>,
    /// Input id of each local edge.
    edge_input: Vec<u32>,
    offsets: Vec<u32>,
    adjacent: Vec<(u32, u32)>,
}

const UNSEEN: u32 = u32::MAX;

impl Local {
    /// Also settles connectivity and bipartiteness; the odd cycle is only
    /// extracted (by a second search) when one is needed.
    fn new(g: &Graph) -> Result<Local, Witness> {
        let n = g.vertex_count();
        let m = g.edge_count();
        assert!(
            n < UNSEEN as usize && 2 * m < UNSEEN as usize,
            "graph too large for 32-bit ids"
        );
        let mut rank = vec![UNSEEN; n];
        let mut side = vec![false; n];
        let mut perm = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n + 1);
        let mut adjacent = Vec::with_capacity(2 * m);
        let mut edge_local = vec![UNSEEN; m];
        let mut edge_input = Vec::with_capacity(m);
        let mut conflict = false;
        rank[0] = 0;
        perm.push(0u32);
        offsets.push(0u32);
        let mut head = 0;
        while head < perm.len() {
            let v = perm[head] as Vertex;
            head += 1;
            for &(w, e) in g.neighbors(v) {
                if rank[w] == UNSEEN {
                    rank[w] = perm.len() as u32;
                    side[w] = !side[v];
                    perm.push(w as u32);
                } else if side[w] == side[v] {
                    conflict = true;
                }
                if edge_local[e] == UNSEEN {
                    edge_local[e] = edge_input.len() as u32;
                    edge_input.push(e as u32);
                }
                adjacent.push((rank[w], edge_local[e]));
            }
            offsets.push(adjacent.len() as u32);
        }
        if perm.len() < n {
            let unreached = rank.iter().position(|&r| r == UNSEEN);
            return Err(Witness::NotConnected { unreached });
        }
        if conflict {
            let cycle = is_bipartite(g).expect_err("same-side edge found");
            return Err(Witness::NotBipartite {
                cycle: cycle.vertices,
            });
        }
        Ok(Local {
            perm,
            rank,
            edge_input,
            offsets,
            adjacent,
        })
    }

    fn neighbors(&self, v: Vertex) -> &[(u32, u32)] {
        &self.adjacent[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    /// Local id of each input edge.
    fn edge_slots(&self) -> Vec<u32> {
        let mut slot = vec![0; self.edge_input.len()];
        for (k, &e) in self.edge_input.iter().enumerate() {
            slot[e as usize] = k as u32;
        }
        slot
    }

    fn rename_order(&self, o: &LexBfsOrder) -> LexBfsOrder {
        let n = self.perm.len();
        let vertex = |u: Vertex| self.perm[u] as Vertex;
        let edge = |e: EdgeId| self.edge_input[e] as EdgeId;
        let mut number = vec![0; n];
        let mut labels = vec![Label::default(); n];
        for (v, &input) in self.perm.iter().enumerate() {
            number[input as usize] = o.number[v];
            labels[input as usize] = o.labels[v].renamed(vertex, edge);
        }
        LexBfsOrder {
            order: o.order.iter().map(|&v| vertex(v)).collect(),
            number,
            labels,
            root: vertex(o.root),
        }
    }
}

impl Witness {
    fn renamed(self, perm: &[u32]) -> Witness {
        let name = |v: Vertex| perm[v] as Vertex;
        match self {
            Witness::LabelTooLarge { vertex, label } => Witness::LabelTooLarge {
                vertex: name(vertex),
                label: label.map(name),
            },
            Witness::BadLabelIntersection { vertex, y, z, size } => Witness::BadLabelIntersection {
                vertex: name(vertex),
                y: name(y),
                z: name(z),
                size,
            },
            Witness::ConsecutiveEqualLabels { first, second } => Witness::ConsecutiveEqualLabels {
                first: name(first),
                second: name(second),
            },
            Witness::DuplicateLabels { first, second } => Witness::DuplicateLabels {
                first: name(first),
                second: name(second),
            },
            w => w,
        }
    }
}

/// Structural fact about median graphs ordered by LexBFS: for a square
/// `(v, y, w, z)` listed from `L(v) = (y, z)`, the common vertex `w` is the
/// search-tree parent of `z` (and `y` is the parent of `v` by construction).
/// Not used by the recognizer; exposed as a diagnostic.
pub fn fellow_traveller_holds(order: &LexBfsOrder, squares: &[Square]) -> bool {
    squares.iter().all(|s| {
        let [v, y, w, z] = s.vertices;
        order.parent(v) == Some(y) && order.parent(z) == Some(w)
    })
}
