//! Wedge classification.
//!
//! Two non-axis-parallel lines through an apex `b` cut the plane into four
//! wedges: the top and bottom wedges lie entirely above and below the
//! horizontal through `b`, the left and right wedges entirely to the left and
//! right of the vertical through `b`. When the lines are given by points `a`
//! and `c`, the wedge with both `a` and `c` on its boundary is the canonical
//! wedge of `(b, a, c)`.

use super::{cross_from, dot_from, sign_of, Frame, GeometryError, Point};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WedgeLabel {
    Top,
    Bottom,
    Left,
    Right,
    /// On one of the two defining lines.
    Boundary,
}

fn line_side(apex: &Point, through: &Point, q: &Point) -> i8 {
    sign_of(&cross_from(apex, through, q))
}

/// Classify `q` against the wedges of apex `b` defined by the lines through
/// `(b, a)` and `(b, c)`, measured in the axis frame `frame`.
///
/// The lines must be distinct and neither parallel nor perpendicular to the
/// frame's abscissa direction ("non-axis-parallel" in the frame).
pub fn classify_wedge_in_frame(
    frame: &Frame,
    b: &Point,
    a: &Point,
    c: &Point,
    q: &Point,
) -> Result<WedgeLabel, GeometryError> {
    if a == b || c == b {
        return Err(GeometryError::DegenerateWedge(
            "defining point coincides with the apex".into(),
        ));
    }
    if cross_from(b, a, c).is_zero() {
        return Err(GeometryError::DegenerateWedge(
            "the two defining lines coincide".into(),
        ));
    }
    for (label, p) in [("first", a), ("second", c)] {
        let (dx, dy) = p.sub(b);
        // Direction components in the frame: along = d . along, up = d . up.
        let along = &dx * &frame.along.0 + &dy * &frame.along.1;
        let up = &dx * &frame.up.0 + &dy * &frame.up.1;
        if along.is_zero() || up.is_zero() {
            return Err(GeometryError::DegenerateWedge(format!(
                "{label} defining line is axis-parallel"
            )));
        }
    }

    let s1 = line_side(b, a, q);
    let s2 = line_side(b, c, q);
    if s1 == 0 || s2 == 0 {
        return Ok(WedgeLabel::Boundary);
    }

    // Identify the wedge by matching the sign pair of q with the sign pairs
    // of the four frame directions, each of which lies strictly inside one
    // wedge because neither defining line is axis-parallel.
    let probes = [
        (WedgeLabel::Top, frame.up_point(b)),
        (WedgeLabel::Bottom, frame.down_point(b)),
        (WedgeLabel::Left, frame.left_point(b)),
        (WedgeLabel::Right, frame.right_point(b)),
    ];
    for (label, probe) in probes {
        if line_side(b, a, &probe) == s1 && line_side(b, c, &probe) == s2 {
            return Ok(label);
        }
    }
    unreachable!("the four cardinal directions cover all four wedges");
}

/// Classify `q` against the wedges of `b` with respect to the standard axes.
pub fn classify_wedge(
    b: &Point,
    a: &Point,
    c: &Point,
    q: &Point,
) -> Result<WedgeLabel, GeometryError> {
    classify_wedge_in_frame(&Frame::standard(), b, a, c, q)
}

/// Label of the wedge having both `a` and `c` on its boundary.
pub fn canonical_wedge(b: &Point, a: &Point, c: &Point) -> Result<WedgeLabel, GeometryError> {
    // a + c - b is strictly inside the cone spanned by the rays b->a, b->c.
    let interior = Point::new(&a.x + &c.x - &b.x, &a.y + &c.y - &b.y);
    classify_wedge(b, a, c, &interior)
}

/// Is `q` strictly inside the wedge of apex `b` spanned by the rays toward
/// `a` and `c`? This is the open canonical wedge `W(b, a, c)` and needs no
/// axis frame at all.
pub fn in_wedge_open(b: &Point, a: &Point, c: &Point, q: &Point) -> Result<bool, GeometryError> {
    let gamma = cross_from(b, a, c);
    if gamma.is_zero() {
        return Err(GeometryError::DegenerateWedge(
            "the two defining lines coincide".into(),
        ));
    }
    let g = sign_of(&gamma);
    Ok(sign_of(&cross_from(b, a, q)) == g && sign_of(&cross_from(b, q, c)) == g)
}

/// Closed variant of [`in_wedge_open`]: includes the two bounding rays and
/// the apex.
pub fn in_wedge_closed(b: &Point, a: &Point, c: &Point, q: &Point) -> Result<bool, GeometryError> {
    let gamma = cross_from(b, a, c);
    if gamma.is_zero() {
        return Err(GeometryError::DegenerateWedge(
            "the two defining lines coincide".into(),
        ));
    }
    if q == b {
        return Ok(true);
    }
    let g = sign_of(&gamma);
    let s1 = sign_of(&cross_from(b, a, q));
    let s2 = sign_of(&cross_from(b, q, c));
    if s1 == 0 {
        // On the line through b, a: inside iff on the ray toward a.
        return Ok(!dot_from(b, q, a).is_negative());
    }
    if s2 == 0 {
        return Ok(!dot_from(b, q, c).is_negative());
    }
    Ok(s1 == g && s2 == g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    #[test]
    fn cardinal_examples() {
        let b = pt(0, 0);
        let a = pt(-1, 1);
        let c = pt(1, 1);
        assert_eq!(classify_wedge(&b, &a, &c, &pt(0, 5)).unwrap(), WedgeLabel::Top);
        assert_eq!(
            classify_wedge(&b, &a, &c, &pt(0, -5)).unwrap(),
            WedgeLabel::Bottom
        );
        assert_eq!(
            classify_wedge(&b, &a, &c, &pt(-5, 0)).unwrap(),
            WedgeLabel::Left
        );
        assert_eq!(
            classify_wedge(&b, &a, &c, &pt(5, 0)).unwrap(),
            WedgeLabel::Right
        );
    }

    #[test]
    fn point_on_defining_line_is_boundary() {
        let b = pt(0, 0);
        assert_eq!(
            classify_wedge(&b, &pt(-1, 1), &pt(1, 1), &pt(2, 2)).unwrap(),
            WedgeLabel::Boundary
        );
    }

    #[test]
    fn axis_parallel_lines_are_rejected() {
        let b = pt(0, 0);
        assert!(classify_wedge(&b, &pt(0, 1), &pt(1, 1), &pt(5, 5)).is_err());
        assert!(classify_wedge(&b, &pt(1, 0), &pt(1, 1), &pt(5, 5)).is_err());
    }

    #[test]
    fn coincident_lines_are_rejected() {
        let b = pt(0, 0);
        assert!(classify_wedge(&b, &pt(1, 1), &pt(2, 2), &pt(5, 0)).is_err());
    }

    #[test]
    fn canonical_wedge_is_the_one_containing_both_rays() {
        let b = pt(0, 0);
        assert_eq!(
            canonical_wedge(&b, &pt(-1, 1), &pt(1, 1)).unwrap(),
            WedgeLabel::Top
        );
        assert_eq!(
            canonical_wedge(&b, &pt(-1, -1), &pt(1, -1)).unwrap(),
            WedgeLabel::Bottom
        );
        assert_eq!(
            canonical_wedge(&b, &pt(-1, 1), &pt(-1, -1)).unwrap(),
            WedgeLabel::Left
        );
    }

    #[test]
    fn open_and_closed_wedge_membership() {
        let b = pt(0, 0);
        let a = pt(-1, 1);
        let c = pt(1, 1);
        assert!(in_wedge_open(&b, &a, &c, &pt(0, 5)).unwrap());
        assert!(!in_wedge_open(&b, &a, &c, &pt(2, 2)).unwrap()); // on ray through c
        assert!(in_wedge_closed(&b, &a, &c, &pt(2, 2)).unwrap());
        assert!(!in_wedge_closed(&b, &a, &c, &pt(-2, -2)).unwrap()); // opposite ray
        assert!(in_wedge_closed(&b, &a, &c, &b).unwrap()); // apex
        assert!(!in_wedge_open(&b, &a, &c, &pt(5, 0)).unwrap());
    }
}
