//! Convex hulls with explicit degenerate forms.

use super::predicates::point_on_segment;
use super::{cross_from, GeometryError, Point, Segment};
use num_traits::{Signed, Zero};

/// Convex hull of a finite point set. Degenerate inputs (a single repeated
/// point, or all points collinear) are represented explicitly rather than
/// rejected, since two-vertex drawings occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvexHull {
    /// All input points coincide.
    Point(Point),
    /// All input points are collinear; the two extremes of their span.
    Segment(Point, Point),
    /// At least three strictly convex vertices in counterclockwise order,
    /// starting from the lexicographically smallest. Collinear interior
    /// points are excluded.
    Polygon(Vec<Point>),
}

impl ConvexHull {
    pub fn is_degenerate(&self) -> bool {
        !matches!(self, ConvexHull::Polygon(_))
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            ConvexHull::Point(_) => 1,
            ConvexHull::Segment(_, _) => 2,
            ConvexHull::Polygon(v) => v.len(),
        }
    }
}

/// Hull vertices in order (counterclockwise for the polygon case).
pub fn hull_vertices(h: &ConvexHull) -> Vec<Point> {
    match h {
        ConvexHull::Point(p) => vec![p.clone()],
        ConvexHull::Segment(a, b) => vec![a.clone(), b.clone()],
        ConvexHull::Polygon(v) => v.clone(),
    }
}

/// Boundary edges of the hull (empty for a point hull).
pub fn hull_edges(h: &ConvexHull) -> Vec<Segment> {
    match h {
        ConvexHull::Point(_) => Vec::new(),
        ConvexHull::Segment(a, b) => vec![Segment::new(a.clone(), b.clone()).unwrap()],
        ConvexHull::Polygon(v) => (0..v.len())
            .map(|i| Segment::new(v[i].clone(), v[(i + 1) % v.len()].clone()).unwrap())
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContainsOutcome {
    Inside,
    OnBoundary,
    Outside,
}

/// Locate `q` relative to the closed hull.
pub fn hull_boundary_contains(h: &ConvexHull, q: &Point) -> ContainsOutcome {
    match h {
        ConvexHull::Point(p) => {
            if p == q {
                ContainsOutcome::OnBoundary
            } else {
                ContainsOutcome::Outside
            }
        }
        ConvexHull::Segment(a, b) => {
            if point_on_segment(q, a, b) {
                ContainsOutcome::OnBoundary
            } else {
                ContainsOutcome::Outside
            }
        }
        ConvexHull::Polygon(v) => {
            let mut on_boundary = false;
            for i in 0..v.len() {
                let a = &v[i];
                let b = &v[(i + 1) % v.len()];
                let cr = cross_from(a, b, q);
                if cr.is_negative() {
                    return ContainsOutcome::Outside;
                }
                if !cr.is_positive() {
                    on_boundary = true;
                }
            }
            if on_boundary {
                ContainsOutcome::OnBoundary
            } else {
                ContainsOutcome::Inside
            }
        }
    }
}

/// Andrew's monotone chain over exact coordinates. Strictly convex output:
/// collinear points along an edge are dropped.
pub fn convex_hull(points: &[Point]) -> Result<ConvexHull, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::EmptyPointSet);
    }
    let mut sorted: Vec<Point> = points.to_vec();
    sorted.sort_by(|p, q| (&p.x, &p.y).cmp(&(&q.x, &q.y)));
    sorted.dedup();
    if sorted.len() == 1 {
        return Ok(ConvexHull::Point(sorted.pop().unwrap()));
    }
    let all_collinear = sorted.len() == 2
        || sorted[2..]
            .iter()
            .all(|p| cross_from(&sorted[0], &sorted[1], p).is_zero());
    if all_collinear {
        let a = sorted.first().unwrap().clone();
        let b = sorted.last().unwrap().clone();
        return Ok(ConvexHull::Segment(a, b));
    }

    let mut build = |iter: &mut dyn Iterator<Item = &Point>| {
        let mut chain: Vec<Point> = Vec::new();
        for p in iter {
            while chain.len() >= 2
                && !cross_from(&chain[chain.len() - 2], &chain[chain.len() - 1], p).is_positive()
            {
                chain.pop();
            }
            chain.push(p.clone());
        }
        chain
    };
    let mut lower = build(&mut sorted.iter());
    let mut upper = build(&mut sorted.iter().rev());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    Ok(ConvexHull::Polygon(lower))
}
