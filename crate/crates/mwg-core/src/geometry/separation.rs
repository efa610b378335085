//! Linear separation of point sets, decided exactly via convex hulls.
//!
//! Two point sets admit a strictly separating line exactly when their convex
//! hulls are disjoint. Disjointness is tested combinatorially (mutual vertex
//! containment plus boundary-edge intersection); when the hulls are disjoint
//! a concrete separator is built from a closest pair between the hulls: the
//! line through the midpoint of the closest pair, perpendicular to it,
//! strictly separates. Everything is rational.

use super::hull::{
    convex_hull, hull_boundary_contains, hull_edges, hull_vertices, ContainsOutcome, ConvexHull,
};
use super::predicates::segments_intersect;
use super::{dist_sq, GeometryError, Point, Rational};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Strict side of a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn matches(self, value: &Rational) -> bool {
        match self {
            Sign::Positive => value.is_positive(),
            Sign::Negative => value.is_negative(),
        }
    }
}

/// The line `a x + b y = c`, with the first point set strictly on the side
/// recorded in `side_of_first`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingLine {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub side_of_first: Sign,
}

impl SeparatingLine {
    /// The canonical horizontal line `y = 0` with the first set above.
    pub fn horizontal_y0_first_above() -> Self {
        SeparatingLine {
            a: Rational::zero(),
            b: Rational::from_integer(1.into()),
            c: Rational::zero(),
            side_of_first: Sign::Positive,
        }
    }

    /// Signed evaluation `a x + b y - c` at `p`.
    pub fn eval(&self, p: &Point) -> Rational {
        &self.a * &p.x + &self.b * &p.y - &self.c
    }

    /// Does every point of `first` lie strictly on the recorded first side
    /// and every point of `second` strictly on the other?
    pub fn strictly_separates(&self, first: &[Point], second: &[Point]) -> bool {
        if self.a.is_zero() && self.b.is_zero() {
            return false;
        }
        first.iter().all(|p| self.side_of_first.matches(&self.eval(p)))
            && second
                .iter()
                .all(|p| self.side_of_first.flip().matches(&self.eval(p)))
    }

    /// Is this exactly the canonical `y = 0` line (up to scaling) with the
    /// first set above?
    pub fn is_horizontal_y0(&self) -> bool {
        self.a.is_zero() && !self.b.is_zero() && self.c.is_zero() && {
            let up = if self.b.is_positive() {
                self.side_of_first
            } else {
                self.side_of_first.flip()
            };
            up == Sign::Positive
        }
    }

    /// Frame attached to this line: abscissa along the line, ordinate toward
    /// the first set's side.
    pub fn frame(&self) -> Frame {
        let normal = (self.a.clone(), self.b.clone());
        let (nx, ny) = match self.side_of_first {
            Sign::Positive => normal,
            Sign::Negative => (-normal.0, -normal.1),
        };
        Frame {
            // Rotate the outward normal clockwise to get the along direction.
            along: (ny.clone(), -nx.clone()),
            up: (nx, ny),
        }
    }

    /// Foot of the perpendicular from `p` onto the line.
    pub fn perpendicular_foot(&self, p: &Point) -> Point {
        let n2 = &self.a * &self.a + &self.b * &self.b;
        let t = self.eval(p) / n2;
        Point::new(&p.x - &t * &self.a, &p.y - &t * &self.b)
    }
}

/// An orthogonal (not necessarily unit) coordinate frame. `along` plays the
/// role of the x-axis and `up` the role of the y-axis; all comparisons made
/// through the frame are scale-invariant sign tests, so unit length is never
/// needed.
#[derive(Debug, Clone)]
pub struct Frame {
    pub along: (Rational, Rational),
    pub up: (Rational, Rational),
}

impl Frame {
    pub fn standard() -> Self {
        let one = Rational::from_integer(1.into());
        Frame {
            along: (one.clone(), Rational::zero()),
            up: (Rational::zero(), one),
        }
    }

    /// Frame abscissa (projection onto `along`).
    pub fn abscissa(&self, p: &Point) -> Rational {
        &p.x * &self.along.0 + &p.y * &self.along.1
    }

    /// Frame ordinate (projection onto `up`).
    pub fn ordinate(&self, p: &Point) -> Rational {
        &p.x * &self.up.0 + &p.y * &self.up.1
    }

    pub fn up_point(&self, b: &Point) -> Point {
        Point::new(&b.x + &self.up.0, &b.y + &self.up.1)
    }

    pub fn down_point(&self, b: &Point) -> Point {
        Point::new(&b.x - &self.up.0, &b.y - &self.up.1)
    }

    pub fn right_point(&self, b: &Point) -> Point {
        Point::new(&b.x + &self.along.0, &b.y + &self.along.1)
    }

    pub fn left_point(&self, b: &Point) -> Point {
        Point::new(&b.x - &self.along.0, &b.y - &self.along.1)
    }
}

/// Squared distance from `p` to the closed segment `ab`, together with the
/// nearest point.
fn closest_point_on_segment(p: &Point, a: &Point, b: &Point) -> (Rational, Point) {
    let (abx, aby) = b.sub(a);
    let (apx, apy) = p.sub(a);
    let len2 = &abx * &abx + &aby * &aby;
    let t = (&apx * &abx + &apy * &aby) / &len2;
    let t = if t.is_negative() {
        Rational::zero()
    } else if t > Rational::from_integer(1.into()) {
        Rational::from_integer(1.into())
    } else {
        t
    };
    let q = Point::new(&a.x + &t * &abx, &a.y + &t * &aby);
    (dist_sq(p, &q), q)
}

/// Do two convex hulls share at least one point?
pub(crate) fn hulls_intersect(ha: &ConvexHull, hb: &ConvexHull) -> bool {
    let pa = hull_vertices(ha);
    let pb = hull_vertices(hb);
    if pb.iter().any(|q| hull_boundary_contains(ha, q) != ContainsOutcome::Outside)
        || pa.iter().any(|q| hull_boundary_contains(hb, q) != ContainsOutcome::Outside)
    {
        return true;
    }
    let ea = hull_edges(ha);
    let eb = hull_edges(hb);
    ea.iter()
        .any(|s1| eb.iter().any(|s2| segments_intersect(s1, s2)))
}

/// Find a strictly separating line between `first` and `second`, or `None`
/// when their convex hulls intersect.
///
/// The input sets must be non-empty and may not share a point.
pub fn find_separating_line(
    first: &[Point],
    second: &[Point],
) -> Result<Option<SeparatingLine>, GeometryError> {
    if first.is_empty() || second.is_empty() {
        return Err(GeometryError::EmptyPointSet);
    }
    for p in first {
        if second.contains(p) {
            return Err(GeometryError::SharedPoint(p.clone()));
        }
    }
    let ha = convex_hull(first)?;
    let hb = convex_hull(second)?;
    if hulls_intersect(&ha, &hb) {
        return Ok(None);
    }

    // Closest pair between the hull boundaries: vertex-vertex distances are
    // covered by the clamped vertex-edge projections.
    let pa = hull_vertices(&ha);
    let pb = hull_vertices(&hb);
    let ea = hull_edges(&ha);
    let eb = hull_edges(&hb);
    let mut best: Option<(Rational, Point, Point)> = None;
    let mut consider = |d: Rational, p: Point, q: Point| {
        if best.as_ref().map_or(true, |(bd, _, _)| &d < bd) {
            best = Some((d, p, q));
        }
    };
    for p in &pa {
        for q in &pb {
            consider(dist_sq(p, q), p.clone(), q.clone());
        }
        for s in &eb {
            let (d, q) = closest_point_on_segment(p, &s.a, &s.b);
            consider(d, p.clone(), q);
        }
    }
    for q in &pb {
        for s in &ea {
            let (d, p) = closest_point_on_segment(q, &s.a, &s.b);
            consider(d, p, q.clone());
        }
    }
    let (_, p, q) = best.expect("non-empty hulls always yield a closest pair");

    // Perpendicular bisector of the closest pair.
    let (nx, ny) = q.sub(&p);
    let mid_scaled_c = {
        // c = n . (p + q) / 2
        let sx = &p.x + &q.x;
        let sy = &p.y + &q.y;
        (&nx * &sx + &ny * &sy) / Rational::from_integer(2.into())
    };
    let line = SeparatingLine {
        a: nx,
        b: ny,
        c: mid_scaled_c,
        side_of_first: Sign::Negative,
    };
    debug_assert!(line.strictly_separates(first, second));
    if !line.strictly_separates(first, second) {
        // Disjoint hulls guarantee this; reaching here means a bug upstream.
        return Ok(None);
    }
    Ok(Some(line))
}

/// Tilt `line` (keeping it strictly separating `first` from `second`) until
/// no two distinct points of `all` share a projection onto the line's
/// direction. Returns the adjusted line and whether an adjustment happened.
///
/// Checkers that order vertices "by increasing x" along the separator need
/// distinct projections; the structural facts they verify hold for every
/// valid separator, so substituting a tie-free one is sound.
pub fn untie_projections(
    line: &SeparatingLine,
    first: &[Point],
    second: &[Point],
    all: &[Point],
) -> (SeparatingLine, bool) {
    let has_ties = |l: &SeparatingLine| {
        let f = l.frame();
        let mut proj: Vec<Rational> = all.iter().map(|p| f.abscissa(p)).collect();
        proj.sort();
        proj.windows(2).any(|w| w[0] == w[1])
    };
    if !has_ties(line) {
        return (line.clone(), false);
    }
    // Tilt the normal by progressively smaller rational amounts until the
    // line still separates and all projections are distinct. Only finitely
    // many directions are bad, so this terminates.
    let mut k: i64 = 2;
    loop {
        for signed in [1i64, -1] {
            let eps = Rational::new(signed.into(), k.into());
            let cand = SeparatingLine {
                a: &line.a + &eps * &line.b,
                b: &line.b - &eps * &line.a,
                c: line.c.clone(),
                side_of_first: line.side_of_first,
            };
            // Recenter: keep the constant so that separation stays strict.
            // Recompute c as the midpoint of the two sides' extreme values.
            let vals_first: Vec<Rational> =
                first.iter().map(|p| &cand.a * &p.x + &cand.b * &p.y).collect();
            let vals_second: Vec<Rational> =
                second.iter().map(|p| &cand.a * &p.x + &cand.b * &p.y).collect();
            let (lo, hi) = match cand.side_of_first {
                Sign::Positive => (vals_first.iter().min(), vals_second.iter().max()),
                Sign::Negative => (vals_second.iter().min(), vals_first.iter().max()),
            };
            let (lo, hi) = (lo.unwrap().clone(), hi.unwrap().clone());
            if hi >= lo {
                continue; // this tilt no longer separates
            }
            let cand = SeparatingLine {
                c: (&lo + &hi) / Rational::from_integer(2.into()),
                ..cand
            };
            if cand.strictly_separates(first, second) && !has_ties(&cand) {
                return (cand, true);
            }
        }
        k = k.saturating_mul(2);
        assert!(k < 1 << 60, "projection untie failed to converge");
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::ints(x, y)).collect()
    }

    #[test]
    fn horizontal_strip_separator_exists() {
        let a = pts(&[(0, 1), (1, 1)]);
        let b = pts(&[(0, -1), (1, -1)]);
        let line = find_separating_line(&a, &b).unwrap().unwrap();
        assert!(line.strictly_separates(&a, &b));
    }

    #[test]
    fn point_inside_segment_hull_has_no_separator() {
        let a = pts(&[(0, 0)]);
        let b = pts(&[(1, 1), (-1, -1)]);
        assert_eq!(find_separating_line(&a, &b).unwrap(), None);
    }

    #[test]
    fn shared_point_is_an_input_error() {
        let a = pts(&[(0, 0), (1, 0)]);
        let b = pts(&[(1, 0), (2, 2)]);
        assert!(matches!(
            find_separating_line(&a, &b),
            Err(GeometryError::SharedPoint(_))
        ));
    }

    #[test]
    fn overlapping_squares_have_no_separator() {
        let a = pts(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let b = pts(&[(2, 2), (6, 2), (6, 6), (2, 6)]);
        assert_eq!(find_separating_line(&a, &b).unwrap(), None);
    }

    #[test]
    fn nested_hulls_have_no_separator() {
        let a = pts(&[(0, 0), (10, 0), (10, 10), (0, 10)]);
        let b = pts(&[(4, 4), (5, 5)]);
        assert_eq!(find_separating_line(&a, &b).unwrap(), None);
    }

    #[test]
    fn diagonal_separation() {
        let a = pts(&[(0, 0), (1, 0), (0, 1)]);
        let b = pts(&[(5, 5), (6, 5), (5, 6)]);
        let line = find_separating_line(&a, &b).unwrap().unwrap();
        assert!(line.strictly_separates(&a, &b));
    }

    #[test]
    fn canonical_horizontal_line() {
        let line = SeparatingLine::horizontal_y0_first_above();
        assert!(line.is_horizontal_y0());
        assert!(line.strictly_separates(
            &pts(&[(3, 1), (-2, 5)]),
            &pts(&[(0, -1), (7, -2)])
        ));
        let f = line.frame();
        assert_eq!(f.abscissa(&Point::ints(3, 7)), rat(3));
        assert_eq!(f.ordinate(&Point::ints(3, 7)), rat(7));
    }

    #[test]
    fn perpendicular_foot_is_rational_and_on_line() {
        let line = SeparatingLine {
            a: rat(1),
            b: rat(2),
            c: rat(3),
            side_of_first: Sign::Positive,
        };
        let foot = line.perpendicular_foot(&Point::ints(5, 5));
        assert_eq!(line.eval(&foot), rat(0));
    }

    #[test]
    fn untie_breaks_projection_ties() {
        let first = pts(&[(0, 1), (0, 2)]); // tie in x
        let second = pts(&[(0, -1), (5, -2)]);
        let line = SeparatingLine::horizontal_y0_first_above();
        let all: Vec<Point> = first.iter().chain(second.iter()).cloned().collect();
        let (tilted, changed) = untie_projections(&line, &first, &second, &all);
        assert!(changed);
        assert!(tilted.strictly_separates(&first, &second));
        let f = tilted.frame();
        let mut proj: Vec<Rational> = all.iter().map(|p| f.abscissa(p)).collect();
        proj.sort();
        assert!(proj.windows(2).all(|w| w[0] != w[1]));
    }
}
