use std::collections::HashMap;

use super::{Point, PolygonError, RectPolygon};
use crate::graph::{bfs_distances, Graph, GraphBuilder, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Maximal axis-parallel segment inside the polygon: `y = coord, lo ≤ x ≤ hi`
/// when horizontal, `x = coord, lo ≤ y ≤ hi` when vertical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    pub axis: Axis,
    pub coord: i64,
    pub lo: i64,
    pub hi: i64,
}

impl Line {
    fn contains(&self, p: Point) -> bool {
        let (c, t) = match self.axis {
            Axis::Horizontal => (p.y, p.x),
            Axis::Vertical => (p.x, p.y),
        };
        c == self.coord && self.lo <= t && t <= self.hi
    }
}

/// Rectangular cell of the arrangement, corners listed counter-clockwise
/// from the lower left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub corners: [Vertex; 4],
    pub min: Point,
    pub max: Point,
}

impl Rect {
    pub fn contains(&self, p: Point) -> bool {
        self.min.x <= p.x && p.x <= self.max.x && self.min.y <= p.y && p.y <= self.max.y
    }
}

#[derive(Debug, Clone)]
pub struct GridArrangement {
    pub lines: Vec<Line>,
    /// Weighted intersection graph; vertices sorted by `(y, x)`.
    pub network: Graph,
    /// Vertex coordinates.
    pub points: Vec<Point>,
    pub cells: Vec<Rect>,
    index: HashMap<Point, Vertex>,
}

impl GridArrangement {
    pub fn vertex_at(&self, p: Point) -> Option<Vertex> {
        self.index.get(&p).copied()
    }

    fn build(mut lines: Vec<Line>) -> Self {
        lines.sort_unstable();
        lines.dedup();
        let (horizontal, vertical): (Vec<Line>, Vec<Line>) =
            lines.iter().partition(|l| l.axis == Axis::Horizontal);

        let mut on_h: Vec<Vec<Point>> = vec![Vec::new(); horizontal.len()];
        let mut on_v: Vec<Vec<Point>> = vec![Vec::new(); vertical.len()];
        for (i, h) in horizontal.iter().enumerate() {
            for (j, v) in vertical.iter().enumerate() {
                let p = Point::new(v.coord, h.coord);
                if h.contains(p) && v.contains(p) {
                    on_h[i].push(p);
                    on_v[j].push(p);
                }
            }
        }
        let mut points: Vec<Point> = on_h.iter().flatten().copied().collect();
        points.sort_unstable_by_key(|p| (p.y, p.x));
        points.dedup();
        let index: HashMap<Point, Vertex> =
            points.iter().enumerate().map(|(i, &p)| (p, i)).collect();

        let mut builder = GraphBuilder::new(points.len());
        let mut link = |run: &mut Vec<Point>, along: fn(&Point) -> i64| {
            run.sort_unstable_by_key(along);
            run.dedup();
            for w in run.windows(2) {
                let len = w[0].l1(w[1]);
                // Two lines on the same axis can overlap only if they coincide.
                let _ = builder.add_weighted_edge(index[&w[0]], index[&w[1]], len);
            }
        };
        for run in &mut on_h {
            link(run, |p| p.x);
        }
        for run in &mut on_v {
            link(run, |p| p.y);
        }
        let network = builder.build();
        let cells = find_cells(&network, &points, &index);
        GridArrangement {
            lines,
            network,
            points,
            cells,
            index,
        }
    }

    /// Network shortest-path distance between two vertices.
    pub fn network_dist(&self, s: Vertex, t: Vertex) -> u64 {
        bfs_distances(&self.network, s)[t]
    }

    /// Every cell, edge or vertex whose closure contains `p`.
    pub fn cells_containing(&self, p: Point) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&i| self.cells[i].contains(p))
            .collect()
    }
}

fn step(g: &Graph, points: &[Point], v: Vertex, dx: i64, dy: i64) -> Option<Vertex> {
    let p = points[v];
    g.neighbors(v).iter().map(|&(w, _)| w).find(|&w| {
        let q = points[w];
        (q.x - p.x).signum() == dx && (q.y - p.y).signum() == dy
    })
}

fn find_cells(g: &Graph, points: &[Point], index: &HashMap<Point, Vertex>) -> Vec<Rect> {
    let mut cells = Vec::new();
    for u in 0..points.len() {
        let (Some(r), Some(a)) = (step(g, points, u, 1, 0), step(g, points, u, 0, 1)) else {
            continue;
        };
        let Some(&c) = index.get(&Point::new(points[r].x, points[a].y)) else {
            continue;
        };
        if step(g, points, r, 0, 1) == Some(c) && step(g, points, a, 1, 0) == Some(c) {
            cells.push(Rect {
                corners: [u, r, c, a],
                min: points[u],
                max: points[c],
            });
        }
    }
    cells
}

/// Maximal segment of `p ∩ {line through q on axis}` containing `q`.
fn line_through(p: &RectPolygon, axis: Axis, q: Point) -> Option<Line> {
    let (coord, t) = match axis {
        Axis::Horizontal => (q.y, q.x),
        Axis::Vertical => (q.x, q.y),
    };
    p.cross_section(axis, coord)
        .into_iter()
        .find(|&(lo, hi)| lo <= t && t <= hi)
        .map(|(lo, hi)| Line {
            axis,
            coord,
            lo,
            hi,
        })
}

fn corner_lines(p: &RectPolygon) -> Vec<Line> {
    let mut lines = Vec::new();
    for &c in p.corners() {
        for axis in [Axis::Horizontal, Axis::Vertical] {
            lines.extend(line_through(p, axis, c));
        }
    }
    lines
}

/// Grid lines through the corners of `p`, their intersection network and cells.
pub fn grid_network(p: &RectPolygon) -> GridArrangement {
    GridArrangement::build(corner_lines(p))
}

/// `N_{s,t}(P)`: the grid network with the lines through `s` and `t` added.
/// Returns the arrangement and the vertex ids of `s` and `t`.
pub fn expanded_network(
    p: &RectPolygon,
    s: Point,
    t: Point,
) -> Result<(GridArrangement, Vertex, Vertex), PolygonError> {
    for q in [s, t] {
        if !p.contains(q) {
            return Err(PolygonError::PointOutside(q));
        }
    }
    let mut lines = corner_lines(p);
    for q in [s, t] {
        for axis in [Axis::Horizontal, Axis::Vertical] {
            lines.extend(line_through(p, axis, q));
        }
    }
    let arr = GridArrangement::build(lines);
    let (sv, tv) = (
        arr.vertex_at(s).expect("s is on two lines"),
        arr.vertex_at(t).expect("t is on two lines"),
    );
    Ok((arr, sv, tv))
}

/// Exact geodesic (intrinsic l1) distance inside `p`, as a shortest path in
/// the expanded network.
pub fn geodesic_dist(p: &RectPolygon, s: Point, t: Point) -> Result<u64, PolygonError> {
    let (arr, sv, tv) = expanded_network(p, s, t)?;
    Ok(arr.network_dist(sv, tv))
}
