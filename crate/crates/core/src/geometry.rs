//! Exact planar predicates on integer points.
//!
//! Every predicate here is decided by the sign of a 3×3 orientation
//! determinant evaluated in 64-bit integer arithmetic. Coordinates are bounded
//! by [`COORD_LIMIT`] so that the determinant never overflows.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exclusive bound on the absolute value of a coordinate.
///
/// With `|x|, |y| < 2^30` every coordinate difference is below `2^31`, each
/// product below `2^62`, and the determinant below `2^63`.
pub const COORD_LIMIT: i64 = 1 << 30;

/// A point of the integer lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Mirror image under `x -> -x`.
    pub const fn mirrored(self) -> Self {
        Point { x: -self.x, y: self.y }
    }

    fn in_range(self) -> bool {
        self.x.abs() < COORD_LIMIT && self.y.abs() < COORD_LIMIT
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

/// Sign of an orientation determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    /// The sign as an integer in `{-1, 0, 1}`.
    pub const fn as_i8(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub const fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

/// Orientation of the ordered triple `abc`: the sign of
///
/// ```text
/// | 1 a.x a.y |
/// | 1 b.x b.y |
/// | 1 c.x c.y |
/// ```
///
/// Positive means `a, b, c` turn counterclockwise.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> Orientation {
    let det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    match det.cmp(&0) {
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Greater => Orientation::CounterClockwise,
    }
}

/// True iff the points are pairwise distinct and no three are collinear.
pub fn is_general_position(points: &[Point]) -> bool {
    find_degeneracy(points).is_none()
}

/// A witness that a list of points is not in general position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    Duplicate(usize, usize),
    Collinear(usize, usize, usize),
}

/// First degeneracy in lexicographic index order, if any.
pub fn find_degeneracy(points: &[Point]) -> Option<Degeneracy> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Some(Degeneracy::Duplicate(i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient(points[i], points[j], points[k]) == Orientation::Collinear {
                    return Some(Degeneracy::Collinear(i, j, k));
                }
            }
        }
    }
    None
}

/// A closed straight-line segment between two distinct points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    /// Returns `None` when `a == b`.
    pub fn new(a: Point, b: Point) -> Option<Self> {
        (a != b).then_some(Segment { a, b })
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn shares_endpoint(&self, other: &Segment) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }

    /// The two segments cross at a single point interior to both.
    pub fn crosses_properly(&self, other: &Segment) -> bool {
        let o1 = orient(self.a, self.b, other.a);
        let o2 = orient(self.a, self.b, other.b);
        let o3 = orient(other.a, other.b, self.a);
        let o4 = orient(other.a, other.b, self.b);
        o1 != Orientation::Collinear
            && o2 != Orientation::Collinear
            && o3 != Orientation::Collinear
            && o4 != Orientation::Collinear
            && o1 != o2
            && o3 != o4
    }
}

// `p` is known to be collinear with `s`; is it inside the bounding box?
fn on_collinear_segment(s: &Segment, p: Point) -> bool {
    s.a.x.min(s.b.x) <= p.x
        && p.x <= s.a.x.max(s.b.x)
        && s.a.y.min(s.b.y) <= p.y
        && p.y <= s.a.y.max(s.b.y)
}

/// True iff the closed segments have no point in common.
///
/// A shared endpoint makes two segments intersect. Collinear overlaps cannot
/// occur for points in general position but are still decided correctly.
pub fn segments_disjoint(s: &Segment, t: &Segment) -> bool {
    if s.shares_endpoint(t) {
        return false;
    }
    let o1 = orient(s.a, s.b, t.a);
    let o2 = orient(s.a, s.b, t.b);
    let o3 = orient(t.a, t.b, s.a);
    let o4 = orient(t.a, t.b, s.b);
    let flat = Orientation::Collinear;

    if o1 != flat && o2 != flat && o3 != flat && o4 != flat {
        return o1 == o2 || o3 == o4;
    }
    // An endpoint on the other segment's line meets it only if it lies within
    // that segment; otherwise the segments cannot meet at all.
    !((o1 == flat && on_collinear_segment(s, t.a))
        || (o2 == flat && on_collinear_segment(s, t.b))
        || (o3 == flat && on_collinear_segment(t, s.a))
        || (o4 == flat && on_collinear_segment(t, s.b)))
}

/// A validated set of at least two points in general position, with every
/// coordinate strictly inside `(-COORD_LIMIT, COORD_LIMIT)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        if let Some(i) = points.iter().position(|p| !p.in_range()) {
            return Err(Error::CoordinateOutOfRange { index: i, point: points[i] });
        }
        match find_degeneracy(&points) {
            Some(Degeneracy::Duplicate(i, j)) => Err(Error::DuplicatePoint { i, j, point: points[i] }),
            Some(Degeneracy::Collinear(i, j, k)) => Err(Error::Collinear {
                i,
                j,
                k,
                points: [points[i], points[j], points[k]],
            }),
            None => Ok(PointSet { points }),
        }
    }

    /// Convenience constructor from coordinate pairs.
    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().copied().map(Point::from).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn segment(&self, i: usize, j: usize) -> Segment {
        Segment { a: self.points[i], b: self.points[j] }
    }

    pub fn orient(&self, i: usize, j: usize, k: usize) -> Orientation {
        orient(self.points[i], self.points[j], self.points[k])
    }

    /// Mirror image under `x -> -x`; keeps the labelling.
    pub fn mirrored(&self) -> PointSet {
        PointSet { points: self.points.iter().map(|p| p.mirrored()).collect() }
    }

    /// The same points relabelled so that new index `i` holds old point `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> PointSet {
        assert_eq!(perm.len(), self.len());
        PointSet { points: perm.iter().map(|&i| self.points[i]).collect() }
    }

    /// Indices of the convex hull vertices in counterclockwise order,
    /// starting from the lowest (then leftmost) point.
    pub fn hull_indices(&self) -> Vec<usize> {
        convex_hull_indices(&self.points)
    }

    /// Hull vertices in counterclockwise order.
    pub fn convex_hull(&self) -> Vec<Point> {
        self.hull_indices().into_iter().map(|i| self.points[i]).collect()
    }

    pub fn is_convex_position(&self) -> bool {
        self.hull_indices().len() == self.len()
    }
}

/// Monotone chain over indices. Collinear boundary points are dropped, which
/// cannot happen for inputs in general position.
fn convex_hull_indices(points: &[Point]) -> Vec<usize> {
    let n = points.len();
    if n < 3 {
        return (0..n).collect();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (points[i].x, points[i].y));

    let mut hull: Vec<usize> = Vec::with_capacity(2 * n);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> =
            if pass == 0 { Box::new(order.iter()) } else { Box::new(order.iter().rev()) };
        for &i in iter {
            while hull.len() >= start + 2 {
                let a = points[hull[hull.len() - 2]];
                let b = points[hull[hull.len() - 1]];
                if orient(a, b, points[i]) == Orientation::CounterClockwise {
                    break;
                }
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }

    // Rotate so the hull starts at the lowest, then leftmost, point.
    let first = (0..hull.len())
        .min_by_key(|&k| (points[hull[k]].y, points[hull[k]].x))
        .unwrap_or(0);
    hull.rotate_left(first);
    hull
}
