//! Exact 2-D primitives over arbitrary-precision rationals.
//!
//! Every predicate in this module is decided exactly; there are no tolerance
//! parameters anywhere. Floating point appears only in SVG emission, far away
//! from here.

mod hull;
mod predicates;
mod separation;
mod strip;
mod terrain;
mod wedge;

pub use hull::{convex_hull, hull_boundary_contains, hull_vertices, ConvexHull};
pub use predicates::{
    gabriel_contains, point_in_triangle, point_on_segment, segments_intersect, Orientation,
};
pub use separation::{find_separating_line, untie_projections, Frame, SeparatingLine, Sign};
pub use strip::{classify_strip, StripLabel, StripSide};
pub use terrain::is_convex_terrain;
pub use wedge::{
    canonical_wedge, classify_wedge, classify_wedge_in_frame, in_wedge_closed, in_wedge_open,
    WedgeLabel,
};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Exact rational scalar used for all coordinates and predicates.
///
/// `num_rational::BigRational` keeps values in lowest terms with a positive
/// denominator, which is exactly the canonical form we need.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Errors raised by geometric preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("degenerate Gabriel disk: the two antipodal points coincide")]
    DegenerateDisk,
    #[error("degenerate triangle: the three corners are collinear")]
    DegenerateTriangle,
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,
    #[error("wedge is undefined: {0}")]
    DegenerateWedge(String),
    #[error("strip orientation error: leading point must have strictly smaller frame abscissa")]
    StripOrientation,
    #[error("input point sets share the point {0}")]
    SharedPoint(Point),
    #[error("input point set is empty")]
    EmptyPointSet,
    #[error("polygon is not strictly on one side of the line")]
    PolygonTouchesLine,
}

/// An exact point in the plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// Point with integer coordinates.
    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    /// Componentwise difference `self - other`.
    pub fn sub(&self, other: &Point) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    /// Reflection across the horizontal axis.
    pub fn reflect_y(&self) -> Point {
        Point::new(self.x.clone(), -&self.y)
    }

    /// Reflection across the vertical axis.
    pub fn reflect_x(&self) -> Point {
        Point::new(-&self.x, self.y.clone())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A straight-line segment with distinct endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }
}

/// Dot product of the vectors `p - o` and `q - o`.
pub(crate) fn dot_from(o: &Point, p: &Point, q: &Point) -> Rational {
    let (ux, uy) = p.sub(o);
    let (vx, vy) = q.sub(o);
    &ux * &vx + &uy * &vy
}

/// Cross product of the vectors `a - o` and `b - o`.
pub(crate) fn cross_from(o: &Point, a: &Point, b: &Point) -> Rational {
    let (ux, uy) = a.sub(o);
    let (vx, vy) = b.sub(o);
    &ux * &vy - &uy * &vx
}

/// Squared Euclidean distance.
pub(crate) fn dist_sq(p: &Point, q: &Point) -> Rational {
    let (dx, dy) = p.sub(q);
    &dx * &dx + &dy * &dy
}

pub(crate) fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// A rational rotation (orthogonal, determinant one) combined with a
/// translation. Rotations are drawn from the Pythagorean family
/// `(cos, sin) = ((m^2 - 1)/(m^2 + 1), 2m/(m^2 + 1))`, so they are exact
/// isometries of the rational plane: disks, wedges, strips, and hulls all
/// transform consistently.
#[derive(Debug, Clone)]
pub struct RigidMotion {
    pub cos: Rational,
    pub sin: Rational,
    pub dx: Rational,
    pub dy: Rational,
}

impl RigidMotion {
    pub fn identity() -> Self {
        RigidMotion {
            cos: Rational::one(),
            sin: Rational::zero(),
            dx: Rational::zero(),
            dy: Rational::zero(),
        }
    }

    pub fn translation(dx: Rational, dy: Rational) -> Self {
        RigidMotion {
            cos: Rational::one(),
            sin: Rational::zero(),
            dx,
            dy,
        }
    }

    /// Pythagorean rotation indexed by `m >= 1`; larger `m` gives a smaller
    /// rotation angle.
    pub fn pythagorean_rotation(m: i64) -> Self {
        let m2 = rat(m) * rat(m);
        let den = &m2 + rat(1);
        RigidMotion {
            cos: (&m2 - rat(1)) / &den,
            sin: rat(2 * m) / &den,
            dx: Rational::zero(),
            dy: Rational::zero(),
        }
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.cos * &p.x - &self.sin * &p.y + &self.dx,
            &self.sin * &p.x + &self.cos * &p.y + &self.dy,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce_to_lowest_terms() {
        let r = ratio(6, -4);
        assert_eq!(r, ratio(-3, 2));
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn pythagorean_rotation_is_orthogonal() {
        for m in 1..10 {
            let r = RigidMotion::pythagorean_rotation(m);
            assert_eq!(&r.cos * &r.cos + &r.sin * &r.sin, rat(1));
        }
    }

    #[test]
    fn rigid_motion_preserves_distance() {
        let r = RigidMotion::pythagorean_rotation(3);
        let p = Point::ints(2, 5);
        let q = Point::ints(-1, 7);
        assert_eq!(dist_sq(&p, &q), dist_sq(&r.apply(&p), &r.apply(&q)));
    }
}
