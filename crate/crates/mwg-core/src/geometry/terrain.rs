//! Convex terrain test.
//!
//! A convex polygon lying strictly on one side of a line is a *convex
//! terrain* with respect to that line when, for every hull vertex, the
//! perpendicular segment dropped from the vertex to the line meets the
//! polygon only at the vertex itself.

use super::hull::ConvexHull;
use super::{cross_from, dot_from, sign_of, GeometryError, Point, SeparatingLine};
use num_traits::Zero;

/// Does the perpendicular drop from `v` leave the polygon immediately?
///
/// `prev` and `next` are the hull neighbours of `v` (counterclockwise). The
/// drop direction `d` points from `v` toward its foot on the line; since the
/// polygon is convex, the drop stays outside the polygon exactly when `d` is
/// outside the closed cone spanned by the two incident edges.
fn drop_leaves_immediately(v: &Point, prev: &Point, next: &Point, foot: &Point) -> bool {
    if foot == v {
        // Degenerate drop: the vertex is on the line, excluded by the
        // precondition check before this is called.
        return false;
    }
    let g = sign_of(&cross_from(v, next, prev));
    debug_assert!(g != 0, "strictly convex hulls have no straight corners");
    let s1 = sign_of(&cross_from(v, next, foot));
    let s2 = sign_of(&cross_from(v, foot, prev));
    if s1 == 0 {
        // Drop direction collinear with the edge toward `next`: inside the
        // cone iff it points along that edge.
        return dot_from(v, foot, next).is_negative();
    }
    if s2 == 0 {
        return dot_from(v, foot, prev).is_negative();
    }
    !(s1 == g && s2 == g)
}

use num_traits::Signed;

/// Is `poly`, which must lie strictly on one side of `line`, a convex
/// terrain with respect to `line`?
pub fn is_convex_terrain(poly: &ConvexHull, line: &SeparatingLine) -> Result<bool, GeometryError> {
    let vertices = super::hull::hull_vertices(poly);
    let side_signs: Vec<i8> = vertices.iter().map(|p| sign_of(&line.eval(p))).collect();
    if side_signs.iter().any(|&s| s == 0) || side_signs.windows(2).any(|w| w[0] != w[1]) {
        return Err(GeometryError::PolygonTouchesLine);
    }

    match poly {
        ConvexHull::Point(_) => Ok(true),
        ConvexHull::Segment(a, b) => {
            for (v, other) in [(a, b), (b, a)] {
                let foot = line.perpendicular_foot(v);
                // Drop along the segment itself overlaps more than {v}.
                if cross_from(v, other, &foot).is_zero() && !dot_from(v, other, &foot).is_negative()
                {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ConvexHull::Polygon(v) => {
            let n = v.len();
            for i in 0..n {
                let prev = &v[(i + n - 1) % n];
                let next = &v[(i + 1) % n];
                let foot = line.perpendicular_foot(&v[i]);
                if !drop_leaves_immediately(&v[i], prev, next, &foot) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}
