//! Core sign-based predicates: orientation, disk membership, triangle
//! membership, segment intersection.

use super::{cross_from, dot_from, GeometryError, Point, Segment};
use num_traits::Signed;

/// Orientation of the ordered triple `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

pub(crate) fn orient(a: &Point, b: &Point, c: &Point) -> Orientation {
    let cr = cross_from(a, b, c);
    if cr.is_positive() {
        Orientation::CounterClockwise
    } else if cr.is_negative() {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// Does `p` lie in the closed Gabriel disk with antipodal points `u`, `v`?
///
/// Decided exactly as `dot(p - u, p - v) <= 0`: the disk with diameter `uv`
/// is the locus of points seeing the diameter at an angle of at least a
/// right angle, boundary included.
pub fn gabriel_contains(p: &Point, u: &Point, v: &Point) -> Result<bool, GeometryError> {
    if u == v {
        return Err(GeometryError::DegenerateDisk);
    }
    Ok(!dot_from(p, u, v).is_positive())
}

/// Is `q` on the closed segment `ab`?
pub fn point_on_segment(q: &Point, a: &Point, b: &Point) -> bool {
    if orient(a, b, q) != Orientation::Collinear {
        return false;
    }
    // Collinear: check q is within the segment's parameter range.
    !dot_from(q, a, b).is_positive()
}

/// Is `q` in the closed triangle with corners `a`, `b`, `c`?
pub fn point_in_triangle(
    q: &Point,
    a: &Point,
    b: &Point,
    c: &Point,
) -> Result<bool, GeometryError> {
    let o = orient(a, b, c);
    if o == Orientation::Collinear {
        return Err(GeometryError::DegenerateTriangle);
    }
    let s1 = orient(a, b, q);
    let s2 = orient(b, c, q);
    let s3 = orient(c, a, q);
    let opposite = |s: Orientation| match o {
        Orientation::CounterClockwise => s == Orientation::Clockwise,
        Orientation::Clockwise => s == Orientation::CounterClockwise,
        Orientation::Collinear => unreachable!(),
    };
    Ok(!opposite(s1) && !opposite(s2) && !opposite(s3))
}

/// Do the closed segments share at least one point?
pub fn segments_intersect(s1: &Segment, s2: &Segment) -> bool {
    let (p1, p2) = (&s1.a, &s1.b);
    let (p3, p4) = (&s2.a, &s2.b);
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);

    use Orientation::*;
    if ((d1 == CounterClockwise && d2 == Clockwise) || (d1 == Clockwise && d2 == CounterClockwise))
        && ((d3 == CounterClockwise && d4 == Clockwise)
            || (d3 == Clockwise && d4 == CounterClockwise))
    {
        return true;
    }
    (d1 == Collinear && point_on_segment(p1, p3, p4))
        || (d2 == Collinear && point_on_segment(p2, p3, p4))
        || (d3 == Collinear && point_on_segment(p3, p1, p2))
        || (d4 == Collinear && point_on_segment(p4, p1, p2))
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio, Rational};
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Segment {
        Segment::new(pt(ax, ay), pt(bx, by)).unwrap()
    }

    #[test]
    fn disk_center_is_inside() {
        assert!(gabriel_contains(&pt(0, 0), &pt(-1, 0), &pt(1, 0)).unwrap());
    }

    #[test]
    fn disk_boundary_point_is_inside() {
        // dot product is exactly zero on the circle; the disk is closed.
        assert!(gabriel_contains(&pt(0, 1), &pt(-1, 0), &pt(1, 0)).unwrap());
    }

    #[test]
    fn point_outside_disk() {
        // dot(p-u, p-v) = (1,2).(-1,2) = 3 > 0
        assert!(!gabriel_contains(&pt(0, 2), &pt(-1, 0), &pt(1, 0)).unwrap());
    }

    #[test]
    fn degenerate_disk_is_an_error() {
        assert_eq!(
            gabriel_contains(&pt(0, 0), &pt(1, 1), &pt(1, 1)),
            Err(GeometryError::DegenerateDisk)
        );
    }

    #[test]
    fn antipodal_points_are_inside() {
        assert!(gabriel_contains(&pt(-1, 0), &pt(-1, 0), &pt(1, 0)).unwrap());
        assert!(gabriel_contains(&pt(1, 0), &pt(-1, 0), &pt(1, 0)).unwrap());
    }

    #[test]
    fn crossing_segments() {
        assert!(segments_intersect(&seg(0, 0, 2, 2), &seg(0, 2, 2, 0)));
    }

    #[test]
    fn disjoint_collinear_segments() {
        assert!(!segments_intersect(&seg(0, 0, 1, 0), &seg(2, 0, 3, 0)));
    }

    #[test]
    fn shared_endpoint_counts_as_intersection() {
        assert!(segments_intersect(&seg(0, 0, 1, 1), &seg(1, 1, 2, 0)));
    }

    #[test]
    fn overlapping_collinear_segments() {
        assert!(segments_intersect(&seg(0, 0, 2, 0), &seg(1, 0, 3, 0)));
    }

    #[test]
    fn triangle_interior_and_vertices() {
        let (a, b, c) = (pt(0, 0), pt(3, 0), pt(0, 3));
        assert!(point_in_triangle(&pt(1, 1), &a, &b, &c).unwrap());
        assert!(point_in_triangle(&pt(0, 0), &a, &b, &c).unwrap());
        assert!(!point_in_triangle(&pt(5, 5), &a, &b, &c).unwrap());
    }

    #[test]
    fn collinear_triangle_is_an_error() {
        assert_eq!(
            point_in_triangle(&pt(0, 0), &pt(0, 0), &pt(1, 1), &pt(2, 2)),
            Err(GeometryError::DegenerateTriangle)
        );
    }

    #[test]
    fn rational_boundary_case() {
        // q exactly on the left edge of a triangle with fractional corners.
        let a = Point::new(ratio(1, 2), rat(0));
        let b = Point::new(ratio(5, 2), rat(0));
        let c = Point::new(ratio(3, 2), rat(2));
        let on_edge = Point::new(rat(1), rat(1));
        assert!(point_in_triangle(&on_edge, &a, &b, &c).unwrap());
        let just_off = Point::new(Rational::new(999.into(), 1000.into()), rat(1));
        assert!(!point_in_triangle(&just_off, &a, &b, &c).unwrap());
    }
}
