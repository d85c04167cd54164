//! Simple rectilinear polygons with integer corners, their grid networks and
//! exact geodesic (intrinsic l1) distances.

mod arrangement;
mod complex;
mod locate;

pub use arrangement::{
    expanded_network, geodesic_dist, grid_network, Axis, GridArrangement, Line, Rect,
};
pub use complex::{
    check_ramified, complex_from_network, CellComplex, ComplexError, RamifiedReport,
};

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn l1(self, other: Point) -> u64 {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 4 corners, got {0}")]
    TooFewCorners(usize),
    #[error("side {0} is not axis-parallel or has zero length")]
    NotAxisParallel(usize),
    #[error("sides {0} and {1} are both horizontal or both vertical")]
    NotAlternating(usize, usize),
    #[error("sides {0} and {1} intersect")]
    SelfIntersection(usize, usize),
    #[error("point ({}, {}) lies outside the polygon", .0.x, .0.y)]
    PointOutside(Point),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A side as a closed axis-parallel segment.
#[derive(Debug, Clone, Copy)]
struct Side {
    a: Point,
    b: Point,
}

impl Side {
    fn horizontal(&self) -> bool {
        self.a.y == self.b.y
    }

    fn x_range(&self) -> (i64, i64) {
        (self.a.x.min(self.b.x), self.a.x.max(self.b.x))
    }

    fn y_range(&self) -> (i64, i64) {
        (self.a.y.min(self.b.y), self.a.y.max(self.b.y))
    }

    fn contains(&self, p: Point) -> bool {
        let (x0, x1) = self.x_range();
        let (y0, y1) = self.y_range();
        x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1
    }

    fn intersects(&self, other: &Side) -> bool {
        let (ax0, ax1) = self.x_range();
        let (ay0, ay1) = self.y_range();
        let (bx0, bx1) = other.x_range();
        let (by0, by1) = other.y_range();
        ax0 <= bx1 && bx0 <= ax1 && ay0 <= by1 && by0 <= ay1
    }
}

/// Simple rectilinear polygon given by its corners in boundary order.
/// The polygon is closed: boundary points belong to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectPolygon {
    corners: Vec<Point>,
}

impl RectPolygon {
    /// Validates the corner list: at least four corners, axis-parallel sides
    /// alternating between horizontal and vertical, and a simple boundary
    /// (checked pairwise over all sides).
    pub fn new(corners: Vec<Point>) -> Result<Self, PolygonError> {
        let k = corners.len();
        if k < 4 {
            return Err(PolygonError::TooFewCorners(k));
        }
        let sides: Vec<Side> = (0..k)
            .map(|i| Side {
                a: corners[i],
                b: corners[(i + 1) % k],
            })
            .collect();
        for (i, s) in sides.iter().enumerate() {
            if (s.a.x == s.b.x) == (s.a.y == s.b.y) {
                return Err(PolygonError::NotAxisParallel(i));
            }
        }
        for i in 0..k {
            let j = (i + 1) % k;
            if sides[i].horizontal() == sides[j].horizontal() {
                return Err(PolygonError::NotAlternating(i, j));
            }
        }
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                if sides[i].intersects(&sides[j]) {
                    return Err(PolygonError::SelfIntersection(i, j));
                }
            }
        }
        Ok(RectPolygon { corners })
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    fn sides(&self) -> impl Iterator<Item = Side> + '_ {
        let k = self.corners.len();
        (0..k).map(move |i| Side {
            a: self.corners[i],
            b: self.corners[(i + 1) % k],
        })
    }

    /// Every corner coordinate multiplied by `factor`.
    pub fn scaled(&self, factor: i64) -> Result<Self, PolygonError> {
        RectPolygon::new(
            self.corners
                .iter()
                .map(|p| Point::new(p.x * factor, p.y * factor))
                .collect(),
        )
    }

    pub fn on_boundary(&self, p: Point) -> bool {
        self.sides().any(|s| s.contains(p))
    }

    /// Boundary-inclusive membership.
    pub fn contains(&self, p: Point) -> bool {
        if self.on_boundary(p) {
            return true;
        }
        let crossings = self
            .sides()
            .filter(|s| !s.horizontal())
            .filter(|s| {
                let (y0, y1) = s.y_range();
                s.a.x > p.x && y0 <= p.y && p.y < y1
            })
            .count();
        crossings % 2 == 1
    }

    /// Closed intervals of the intersection of the polygon with the
    /// horizontal line `y = c` (for [`Axis::Horizontal`]) or the vertical
    /// line `x = c`, sorted and merged.
    pub fn cross_section(&self, axis: Axis, c: i64) -> Vec<(i64, i64)> {
        // Coordinates along the line and across it, for a side.
        let along = |p: Point| if axis == Axis::Horizontal { p.x } else { p.y };
        let across = |p: Point| if axis == Axis::Horizontal { p.y } else { p.x };
        let parallel = |s: &Side| s.horizontal() == (axis == Axis::Horizontal);

        let mut intervals = Vec::new();
        for upper in [true, false] {
            let mut hits: Vec<i64> = self
                .sides()
                .filter(|s| !parallel(s))
                .filter(|s| {
                    let (lo, hi) = (across(s.a).min(across(s.b)), across(s.a).max(across(s.b)));
                    if upper {
                        lo <= c && c < hi
                    } else {
                        lo < c && c <= hi
                    }
                })
                .map(|s| along(s.a))
                .collect();
            hits.sort_unstable();
            intervals.extend(hits.chunks_exact(2).map(|w| (w[0], w[1])));
        }
        for s in self.sides().filter(|s| parallel(s) && across(s.a) == c) {
            intervals.push((along(s.a).min(along(s.b)), along(s.a).max(along(s.b))));
        }
        intervals.sort_unstable();
        let mut merged: Vec<(i64, i64)> = Vec::new();
        for (lo, hi) in intervals {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        merged
    }

    /// Twice the signed area (positive for counter-clockwise corner order).
    pub fn doubled_area(&self) -> i128 {
        let k = self.corners.len();
        (0..k)
            .map(|i| {
                let (p, q) = (self.corners[i], self.corners[(i + 1) % k]);
                p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128
            })
            .sum()
    }
}

/// Parses `polygon k` followed by `k` lines `x y`. Coordinates may be
/// decimals when `scale` turns every one of them into an integer.
pub fn parse_polygon(text: &str, scale: i64) -> Result<RectPolygon, PolygonError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse_err = |line: usize, message: &str| PolygonError::Parse {
        line,
        message: message.to_string(),
    };
    let (line, header) = lines.next().ok_or_else(|| parse_err(0, "empty input"))?;
    let count: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["polygon", k] => k.parse().map_err(|_| parse_err(line, "bad corner count"))?,
        _ => return Err(parse_err(line, "expected `polygon k`")),
    };
    let mut corners = Vec::with_capacity(count);
    for (line, text) in lines {
        let coords: Vec<&str> = text.split_whitespace().collect();
        if coords.len() != 2 {
            return Err(parse_err(line, "expected `x y`"));
        }
        let x = scale_decimal(coords[0], scale).ok_or_else(|| parse_err(line, "bad coordinate"))?;
        let y = scale_decimal(coords[1], scale).ok_or_else(|| parse_err(line, "bad coordinate"))?;
        corners.push(Point::new(x, y));
    }
    if corners.len() != count {
        return Err(parse_err(
            0,
            &format!("declared {count} corners, found {}", corners.len()),
        ));
    }
    RectPolygon::new(corners)
}

/// `text * scale` for a decimal literal, if the product is an integer.
pub fn scale_decimal(text: &str, scale: i64) -> Option<i64> {
    let (negative, digits) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let denom = 10i128.checked_pow(frac_part.len() as u32)?;
    let numer: i128 = format!("{int_part}{frac_part}")
        .trim_start_matches('0')
        .parse()
        .or_else(|_| {
            if format!("{int_part}{frac_part}").chars().all(|c| c == '0') {
                Ok(0)
            } else {
                Err(())
            }
        })
        .ok()?;
    let scaled = numer.checked_mul(scale as i128)?;
    if scaled % denom != 0 {
        return None;
    }
    let value = i64::try_from(scaled / denom).ok()?;
    Some(if negative { -value } else { value })
}

pub fn write_polygon(p: &RectPolygon) -> String {
    let mut out = format!("polygon {}\n", p.corners.len());
    for c in &p.corners {
        writeln!(out, "{} {}", c.x, c.y).unwrap();
    }
    out
}
