use super::{CellComplex, GridArrangement, Point};
use crate::factorization::{Color, TwoTreeEmbedding};
use crate::oracle::ComplexPoint;

impl GridArrangement {
    /// Every way of naming `p` as a point of `complex`, which must be built
    /// on this arrangement's network: the vertex at `p`, each edge through
    /// `p`, and each square whose closed rectangle contains `p`.
    pub fn placements(
        &self,
        complex: &CellComplex,
        e: &TwoTreeEmbedding,
        p: Point,
    ) -> Vec<ComplexPoint> {
        let g = &complex.graph;
        let mut out = Vec::new();
        if let Some(v) = self.vertex_at(p) {
            out.push(ComplexPoint::Vertex(v));
        }
        for (edge, &(u, v)) in g.edges().iter().enumerate() {
            let (a, b) = (self.points[u], self.points[v]);
            let inside = a.x.min(b.x) <= p.x
                && p.x <= a.x.max(b.x)
                && a.y.min(b.y) <= p.y
                && p.y <= a.y.max(b.y);
            if inside {
                out.push(ComplexPoint::Edge {
                    edge,
                    offset: a.l1(p),
                });
            }
        }
        for (square, s) in complex.squares.iter().enumerate() {
            let corners = s.vertices.map(|v| self.points[v]);
            let lo = Point::new(
                corners.iter().map(|c| c.x).min().unwrap(),
                corners.iter().map(|c| c.y).min().unwrap(),
            );
            let hi = Point::new(
                corners.iter().map(|c| c.x).max().unwrap(),
                corners.iter().map(|c| c.y).max().unwrap(),
            );
            if !(lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y) {
                continue;
            }
            let base = *s.vertices.iter().min().expect("four corners");
            let (x, y) = s.edges_at(s.corner_index(base).expect("corner"));
            let first = if e.edge_color(x) == Color::First {
                x
            } else {
                y
            };
            let (u, v) = g.endpoints(first);
            let other = if u == base { v } else { u };
            let (bp, op) = (self.points[base], self.points[other]);
            let (a, b) = if bp.y == op.y {
                (p.x.abs_diff(bp.x), p.y.abs_diff(bp.y))
            } else {
                (p.y.abs_diff(bp.y), p.x.abs_diff(bp.x))
            };
            out.push(ComplexPoint::Square { square, a, b });
        }
        out
    }
}
