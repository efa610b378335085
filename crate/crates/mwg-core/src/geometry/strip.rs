//! Vertical strips and half-strips.
//!
//! For two points `u0`, `u1` with `x(u0) < x(u1)`, the open vertical strip
//! `S(u0, u1)` is the set of points whose abscissa lies strictly between
//! them. The segment line through `u0`, `u1` splits the strip into a near
//! half-strip (on the separating-line side) and a far half-strip. Measured
//! in an arbitrary [`Frame`], "vertical" means perpendicular to the frame's
//! abscissa direction, which is how the checkers apply these notions to
//! drawings separated by a non-horizontal line.

use super::{cross_from, sign_of, Frame, GeometryError, Point};
use serde::{Deserialize, Serialize};

/// Which side of the segment line counts as "near" (toward the separator).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StripSide {
    /// Positive sign of `cross(u1 - u0, q - u0)`.
    Positive,
    /// Negative sign of `cross(u1 - u0, q - u0)`.
    Negative,
}

impl StripSide {
    fn sign(self) -> i8 {
        match self {
            StripSide::Positive => 1,
            StripSide::Negative => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StripLabel {
    /// Strictly inside the strip, on the near side of the segment line.
    Near,
    /// Strictly inside the strip, on the far side of the segment line.
    Far,
    /// Strictly inside the strip, exactly on the segment line.
    OnSegmentLine,
    /// On or beyond a bounding vertical line.
    Outside,
}

/// Classify `q` against the open strip of `u0`, `u1` in the given frame.
///
/// Requires the frame abscissa of `u0` to be strictly smaller than that of
/// `u1`.
pub fn classify_strip_in_frame(
    frame: &Frame,
    u0: &Point,
    u1: &Point,
    near: StripSide,
    q: &Point,
) -> Result<StripLabel, GeometryError> {
    let x0 = frame.abscissa(u0);
    let x1 = frame.abscissa(u1);
    if x0 >= x1 {
        return Err(GeometryError::StripOrientation);
    }
    let xq = frame.abscissa(q);
    if xq <= x0 || xq >= x1 {
        return Ok(StripLabel::Outside);
    }
    let side = sign_of(&cross_from(u0, u1, q));
    Ok(if side == 0 {
        StripLabel::OnSegmentLine
    } else if side == near.sign() {
        StripLabel::Near
    } else {
        StripLabel::Far
    })
}

/// Classify `q` against the open vertical strip of `u0`, `u1` in standard
/// axes.
pub fn classify_strip(
    u0: &Point,
    u1: &Point,
    near: StripSide,
    q: &Point,
) -> Result<StripLabel, GeometryError> {
    classify_strip_in_frame(&Frame::standard(), u0, u1, near, q)
}

/// Is `q` in the closed strip `S[u0, u1]` (boundary lines included)?
pub fn in_closed_strip(frame: &Frame, u0: &Point, u1: &Point, q: &Point) -> bool {
    let x0 = frame.abscissa(u0);
    let x1 = frame.abscissa(u1);
    let (lo, hi) = if x0 <= x1 { (x0, x1) } else { (x1, x0) };
    let xq = frame.abscissa(q);
    lo <= xq && xq <= hi
}

/// Is `q` in the closed far half-strip `S_F[u0, u1]` (segment line and
/// vertical boundaries included)?
pub fn in_far_half_strip_closed(
    frame: &Frame,
    u0: &Point,
    u1: &Point,
    near: StripSide,
    q: &Point,
) -> bool {
    if !in_closed_strip(frame, u0, u1, q) {
        return false;
    }
    sign_of(&cross_from(u0, u1, q)) != near.sign()
}

/// Is `q` in the open near half-strip `S_N(u0, u1)`?
pub fn in_near_half_strip_open(
    frame: &Frame,
    u0: &Point,
    u1: &Point,
    near: StripSide,
    q: &Point,
) -> bool {
    matches!(
        classify_strip_in_frame(frame, u0, u1, near, q),
        Ok(StripLabel::Near)
    )
}

/// Derive the near side for a pair `u0`, `u1` from a point `anchor` known to
/// lie on the separator side of the segment line (typically the separator's
/// point below the strip's midline). Returns `None` when the anchor is on
/// the segment line itself.
pub fn near_side_from_anchor(u0: &Point, u1: &Point, anchor: &Point) -> Option<StripSide> {
    match sign_of(&cross_from(u0, u1, anchor)) {
        1 => Some(StripSide::Positive),
        -1 => Some(StripSide::Negative),
        _ => None,
    }
}
