use crate::graph::{EdgeId, Graph, LexBfsOrder, Vertex};

/// A 4-cycle of the graph. `vertices` are in cyclic order and `edges[i]`
/// joins `vertices[i]` to `vertices[(i + 1) % 4]`.
///
/// Squares produced by [`list_squares`] are stored as `(v, y, w, z)` where
/// `L(v) = (y, z)` and `L(y) ∩ L(z) = {w}`, so `v` is the latest-numbered
/// corner and `w` the earliest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Square {
    pub vertices: [Vertex; 4],
    pub edges: [EdgeId; 4],
}

impl Square {
    /// Square through `a-b-c-d-a`, if all four edges exist.
    pub fn from_cycle(g: &Graph, vertices: [Vertex; 4]) -> Option<Square> {
        let mut edges = [0; 4];
        for i in 0..4 {
            edges[i] = g.edge_between(vertices[i], vertices[(i + 1) % 4])?;
        }
        Some(Square { vertices, edges })
    }

    /// The two edges meeting at corner `i`.
    pub fn edges_at(&self, i: usize) -> (EdgeId, EdgeId) {
        (self.edges[(i + 3) % 4], self.edges[i])
    }

    pub fn corner_index(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// Edge of this square meeting `e` at corner `x`, if `e` is a side at `x`.
    pub fn other_edge_at(&self, x: Vertex, e: EdgeId) -> Option<EdgeId> {
        let i = self.corner_index(x)?;
        let (a, b) = self.edges_at(i);
        if a == e {
            Some(b)
        } else if b == e {
            Some(a)
        } else {
            None
        }
    }

    /// Sorted corner set, for comparing squares irrespective of rotation.
    pub fn corner_set(&self) -> [Vertex; 4] {
        let mut c = self.vertices;
        c.sort_unstable();
        c
    }
}

/// One square per vertex with a two-entry label, in vertex id order.
///
/// Assumes the labels passed [`super::check_labels`].
pub fn list_squares(g: &Graph, o: &LexBfsOrder) -> Vec<Square> {
    let squares = squares_from_labels(o);
    debug_assert!(squares
        .iter()
        .all(|s| Square::from_cycle(g, s.vertices) == Some(*s)));
    squares
}

pub(super) fn squares_from_labels(o: &LexBfsOrder) -> Vec<Square> {
    let n = o.labels.len();
    let mut squares = Vec::with_capacity(n);
    for v in 0..n {
        let label = o.label(v);
        if label.len() != 2 {
            continue;
        }
        let (y, z) = (label.vertices()[0], label.vertices()[1]);
        let (ly, lz) = (o.label(y), o.label(z));
        let w = *ly
            .vertices()
            .iter()
            .find(|u| lz.vertices().contains(u))
            .expect("label intersection checked");
        squares.push(Square {
            vertices: [v, y, w, z],
            edges: [
                label.edges()[0],
                ly.edge_to(w).expect("w in L(y)"),
                lz.edge_to(w).expect("w in L(z)"),
                label.edges()[1],
            ],
        });
    }
    squares
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_grid, gen_random_tree};
    use crate::graph::lexbfs;

    #[test]
    fn four_cycle_has_one_square() {
        let g = gen_cycle(4).unwrap();
        let o = lexbfs(&g, 0).unwrap();
        let s = list_squares(&g, &o);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].vertices, [2, 1, 0, 3]);
        assert_eq!(Square::from_cycle(&g, s[0].vertices), Some(s[0]));
    }

    #[test]
    fn three_by_three_grid_has_four_squares() {
        let g = gen_grid(3, 3).unwrap();
        let o = lexbfs(&g, 0).unwrap();
        assert_eq!(list_squares(&g, &o).len(), 4);
    }

    #[test]
    fn trees_have_none() {
        let g = gen_random_tree(30, 5).unwrap();
        let o = lexbfs(&g, 0).unwrap();
        assert!(list_squares(&g, &o).is_empty());
    }

    #[test]
    fn other_edge_at_corner() {
        let g = gen_cycle(4).unwrap();
        let s = Square::from_cycle(&g, [0, 1, 2, 3]).unwrap();
        let e01 = g.edge_between(0, 1).unwrap();
        let e03 = g.edge_between(0, 3).unwrap();
        assert_eq!(s.other_edge_at(0, e01), Some(e03));
        assert_eq!(s.other_edge_at(2, e01), None);
    }
}
