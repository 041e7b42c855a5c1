//! Exact rectilinear curves over quarter-integer coordinates.
//!
//! All geometry here is integer arithmetic on quarter units: tile centers sit
//! at multiples of 4, glue midpoints at multiples of 2, and nano-embedding
//! offsets at odd values. Ray-cast probes are realized at eighth-unit offsets
//! internally, so no ray ever passes through a curve vertex and no floating
//! point is needed anywhere.

use thiserror::Error;

use crate::model::{Dir, Point};
use crate::path::Path;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("curve needs at least one vertex")]
    Empty,
    #[error("vertices {0} and {1} are not axis-aligned")]
    NotAxisAligned(usize, usize),
    #[error("zero-length segment at vertex {0}")]
    ZeroSegment(usize),
    #[error("concatenation endpoints do not match at curve {0}")]
    EndpointMismatch(usize),
    #[error("curve is not simple and closed")]
    NotSimpleClosed,
}

/// A point with quarter-unit coordinates: `(qx/4, qy/4)` in tile units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPoint {
    pub qx: i64,
    pub qy: i64,
}

impl QPoint {
    pub const fn new(qx: i64, qy: i64) -> QPoint {
        QPoint { qx, qy }
    }

    /// The center of a grid cell.
    pub fn from_cell(p: Point) -> QPoint {
        QPoint::new(p.x as i64 * 4, p.y as i64 * 4)
    }

    pub fn linf(self, other: QPoint) -> i64 {
        (self.qx - other.qx).abs().max((self.qy - other.qy).abs())
    }

    pub fn offset(self, dqx: i64, dqy: i64) -> QPoint {
        QPoint::new(self.qx + dqx, self.qy + dqy)
    }
}

impl std::fmt::Display for QPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}/4,{}/4)", self.qx, self.qy)
    }
}

/// An axis-parallel polyline. Consecutive vertices differ in exactly one
/// coordinate; single-vertex curves are degenerate points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCurve {
    verts: Vec<QPoint>,
}

impl PolyCurve {
    pub fn new(verts: Vec<QPoint>) -> Result<PolyCurve, GeomError> {
        if verts.is_empty() {
            return Err(GeomError::Empty);
        }
        for i in 0..verts.len() - 1 {
            let (a, b) = (verts[i], verts[i + 1]);
            if a == b {
                return Err(GeomError::ZeroSegment(i));
            }
            if a.qx != b.qx && a.qy != b.qy {
                return Err(GeomError::NotAxisAligned(i, i + 1));
            }
        }
        Ok(PolyCurve { verts })
    }

    pub fn point(p: QPoint) -> PolyCurve {
        PolyCurve { verts: vec![p] }
    }

    pub fn segment(a: QPoint, b: QPoint) -> Result<PolyCurve, GeomError> {
        PolyCurve::new(vec![a, b])
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.verts
    }

    pub fn first(&self) -> QPoint {
        self.verts[0]
    }

    pub fn last(&self) -> QPoint {
        *self.verts.last().unwrap()
    }

    pub fn is_degenerate(&self) -> bool {
        self.verts.len() == 1
    }

    pub fn segments(&self) -> impl Iterator<Item = (QPoint, QPoint)> + '_ {
        self.verts.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn reversed(&self) -> PolyCurve {
        let mut verts = self.verts.clone();
        verts.reverse();
        PolyCurve { verts }
    }

    /// Merges collinear consecutive segments; geometric range is unchanged.
    pub fn simplified(&self) -> PolyCurve {
        if self.verts.len() <= 2 {
            return self.clone();
        }
        let mut out = vec![self.verts[0]];
        for i in 1..self.verts.len() - 1 {
            let a = *out.last().unwrap();
            let b = self.verts[i];
            let c = self.verts[i + 1];
            let collinear = (a.qx == b.qx && b.qx == c.qx) || (a.qy == b.qy && b.qy == c.qy);
            if !collinear {
                out.push(b);
            }
        }
        out.push(*self.verts.last().unwrap());
        PolyCurve { verts: out }
    }

    /// True iff a point lies on the polyline.
    pub fn contains_point(&self, p: QPoint) -> bool {
        if self.is_degenerate() {
            return self.verts[0] == p;
        }
        self.segments().any(|(a, b)| on_segment(a, b, p))
    }
}

fn on_segment(a: QPoint, b: QPoint, p: QPoint) -> bool {
    if a.qx == b.qx {
        p.qx == a.qx && p.qy >= a.qy.min(b.qy) && p.qy <= a.qy.max(b.qy)
    } else {
        p.qy == a.qy && p.qx >= a.qx.min(b.qx) && p.qx <= a.qx.max(b.qx)
    }
}

/// The polyline through the tile centers of a path; a single point for
/// one-tile paths.
pub fn canonical_embedding(p: &Path) -> PolyCurve {
    let verts: Vec<QPoint> = p.positions().map(QPoint::from_cell).collect();
    if verts.len() == 1 {
        PolyCurve::point(verts[0])
    } else {
        PolyCurve::new(verts).expect("path positions are adjacent and distinct")
    }
}

/// Joins curves end to start. Each curve's last vertex must equal the next
/// curve's first vertex; continuity of the result follows.
pub fn concat(curves: &[PolyCurve]) -> Result<PolyCurve, GeomError> {
    if curves.is_empty() {
        return Err(GeomError::Empty);
    }
    let mut verts: Vec<QPoint> = vec![curves[0].first()];
    for (idx, c) in curves.iter().enumerate() {
        if c.first() != *verts.last().unwrap() {
            return Err(GeomError::EndpointMismatch(idx));
        }
        verts.extend_from_slice(&c.vertices()[1..]);
    }
    if verts.len() == 1 {
        return Ok(PolyCurve::point(verts[0]));
    }
    PolyCurve::new(verts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Overlap {
    Empty,
    Touch(QPoint),
    Shared,
}

/// Exact intersection classification for two axis-parallel segments.
fn segment_overlap(a1: QPoint, a2: QPoint, b1: QPoint, b2: QPoint) -> Overlap {
    let a_vert = a1.qx == a2.qx;
    let b_vert = b1.qx == b2.qx;
    if a_vert && b_vert {
        if a1.qx != b1.qx {
            return Overlap::Empty;
        }
        let (alo, ahi) = (a1.qy.min(a2.qy), a1.qy.max(a2.qy));
        let (blo, bhi) = (b1.qy.min(b2.qy), b1.qy.max(b2.qy));
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => Overlap::Empty,
            std::cmp::Ordering::Equal => Overlap::Touch(QPoint::new(a1.qx, lo)),
            std::cmp::Ordering::Less => Overlap::Shared,
        }
    } else if !a_vert && !b_vert {
        if a1.qy != b1.qy {
            return Overlap::Empty;
        }
        let (alo, ahi) = (a1.qx.min(a2.qx), a1.qx.max(a2.qx));
        let (blo, bhi) = (b1.qx.min(b2.qx), b1.qx.max(b2.qx));
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => Overlap::Empty,
            std::cmp::Ordering::Equal => Overlap::Touch(QPoint::new(lo, a1.qy)),
            std::cmp::Ordering::Less => Overlap::Shared,
        }
    } else {
        let (v1, v2, h1, h2) = if a_vert { (a1, a2, b1, b2) } else { (b1, b2, a1, a2) };
        let x = v1.qx;
        let y = h1.qy;
        if x >= h1.qx.min(h2.qx) && x <= h1.qx.max(h2.qx) && y >= v1.qy.min(v2.qy) && y <= v1.qy.max(v2.qy) {
            Overlap::Touch(QPoint::new(x, y))
        } else {
            Overlap::Empty
        }
    }
}

/// True iff the curve is closed (first vertex equals last) and no two
/// segments intersect except consecutive ones at their shared endpoint.
pub fn is_simple_closed(c: &PolyCurve) -> bool {
    let verts = c.vertices();
    if verts.len() < 4 || c.first() != c.last() {
        return false;
    }
    let segs: Vec<(QPoint, QPoint)> = c.segments().collect();
    let n = segs.len();
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let ov = segment_overlap(segs[i].0, segs[i].1, segs[j].0, segs[j].1);
            match ov {
                Overlap::Empty => {
                    if adjacent {
                        return false;
                    }
                }
                Overlap::Touch(p) => {
                    if !adjacent {
                        return false;
                    }
                    let shared = if j == i + 1 { segs[i].1 } else { segs[i].0 };
                    if p != shared {
                        return false;
                    }
                }
                Overlap::Shared => return false,
            }
        }
    }
    true
}

/// Location of a probe point relative to a simple closed curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Outside,
    OnCurve,
}

/// Even-odd ray cast with a southward ray. The ray is conceptually offset by
/// an eighth unit to the east, so it can never pass through a vertex of the
/// curve; with integer coordinates this is the standard half-open span rule.
///
/// Pre: `is_simple_closed(c)`.
pub fn point_in_bounded_component(c: &PolyCurve, p: QPoint) -> Location {
    locate_scaled(c, p.qx * 2, p.qy * 2)
}

/// Core ray cast over eighth-unit coordinates. Curve coordinates are doubled
/// quarter units and therefore always even; probes may be odd.
pub(crate) fn locate_scaled(c: &PolyCurve, px8: i64, py8: i64) -> Location {
    let mut crossings = 0usize;
    for (a, b) in c.segments() {
        let (ax, ay, bx, by) = (a.qx * 2, a.qy * 2, b.qx * 2, b.qy * 2);
        if ax == bx {
            // vertical segment: on-curve only
            if px8 == ax && py8 >= ay.min(by) && py8 <= ay.max(by) {
                return Location::OnCurve;
            }
        } else {
            let (lo, hi) = (ax.min(bx), ax.max(bx));
            if py8 == ay && px8 >= lo && px8 <= hi {
                return Location::OnCurve;
            }
            // the east-offset southward ray crosses the closed x-span
            // [lo, hi] iff lo <= px8 < hi, for segments strictly below
            if ay < py8 && lo <= px8 && px8 < hi {
                crossings += 1;
            }
        }
    }
    if crossings % 2 == 1 {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// True iff the left-hand side of the directed curve is its bounded component.
///
/// The probe sits an eighth unit along the first segment and an eighth unit to
/// its left; curve coordinates are even in eighth units so the probe is never
/// on the curve, and nothing can separate it from the segment.
pub fn lhs_is_bounded(c: &PolyCurve) -> Result<bool, GeomError> {
    if !is_simple_closed(c) {
        return Err(GeomError::NotSimpleClosed);
    }
    let (a, b) = c.segments().next().unwrap();
    let dir8 = ((b.qx - a.qx).signum(), (b.qy - a.qy).signum());
    let left8 = (-dir8.1, dir8.0);
    let px8 = a.qx * 2 + dir8.0 + left8.0;
    let py8 = a.qy * 2 + dir8.1 + left8.1;
    Ok(locate_scaled(c, px8, py8) == Location::Inside)
}

/// Right normal of a travel direction: the side a right-hand offset curve
/// lies on.
pub fn right_normal(d: Dir) -> (i64, i64) {
    let r = d.rotate_cw().step();
    (r.dx as i64, r.dy as i64)
}

/// The offset curve at L-infinity distance exactly 0.25 on the right-hand
/// side of a path's canonical embedding.
///
/// Straight tiles contribute no vertex; turn tiles contribute the corner
/// `center + 0.25*(rn(in) + rn(out))`, which cuts right-turn corners and
/// wraps left-turn corners. The curve starts beside the first tile's center,
/// offset against its output side, and ends beside the last tile's center,
/// offset against its input side.
///
/// Pre: `p.len() >= 2`.
pub fn nano_embedding(p: &Path) -> PolyCurve {
    assert!(p.len() >= 2, "nano-embedding needs at least two tiles");
    let mut verts = Vec::new();
    let out0 = p.heading_at(1);
    let c0 = QPoint::from_cell(p.tile(0).pos);
    let rn0 = right_normal(out0);
    verts.push(c0.offset(rn0.0, rn0.1));
    for i in 1..p.len() - 1 {
        let din = p.heading_at(i);
        let dout = p.heading_at(i + 1);
        if din != dout {
            let a = right_normal(din);
            let b = right_normal(dout);
            let c = QPoint::from_cell(p.tile(i).pos);
            verts.push(c.offset(a.0 + b.0, a.1 + b.1));
        }
    }
    let din_last = p.heading_at(p.len() - 1);
    let cl = QPoint::from_cell(p.last().pos);
    let rnl = right_normal(din_last);
    verts.push(cl.offset(rnl.0, rnl.1));
    PolyCurve::new(verts).expect("offset corners stay axis-aligned")
}

/// Exact L-infinity distance from a point to an axis-parallel segment.
pub fn linf_point_segment(p: QPoint, a: QPoint, b: QPoint) -> i64 {
    let cx = p.qx.clamp(a.qx.min(b.qx), a.qx.max(b.qx));
    let cy = p.qy.clamp(a.qy.min(b.qy), a.qy.max(b.qy));
    (p.qx - cx).abs().max((p.qy - cy).abs())
}

/// Exact L-infinity distance from a point to a polyline.
pub fn linf_point_curve(p: QPoint, c: &PolyCurve) -> i64 {
    if c.is_degenerate() {
        return p.linf(c.first());
    }
    c.segments().map(|(a, b)| linf_point_segment(p, a, b)).min().unwrap()
}

/// True iff two polylines share any point (exact).
pub fn curves_intersect(a: &PolyCurve, b: &PolyCurve) -> bool {
    if a.is_degenerate() {
        return b.contains_point(a.first());
    }
    if b.is_degenerate() {
        return a.contains_point(b.first());
    }
    for (a1, a2) in a.segments() {
        for (b1, b2) in b.segments() {
            if segment_overlap(a1, a2, b1, b2) != Overlap::Empty {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Tile, TileId};
    use crate::path::Path;

    fn q(tx: i64, ty: i64) -> QPoint {
        // whole-tile coordinates for readability
        QPoint::new(tx * 4, ty * 4)
    }

    fn path_of(points: &[(i32, i32)]) -> Path {
        Path::new_positional(
            points.iter().map(|&(x, y)| Tile::new(Point::new(x, y), TileId(0))).collect(),
        )
        .unwrap()
    }

    fn unit_square_ccw() -> PolyCurve {
        PolyCurve::new(vec![q(0, 0), q(1, 0), q(1, 1), q(0, 1), q(0, 0)]).unwrap()
    }

    #[test]
    fn embedding_of_east_run_is_a_straight_polyline() {
        let p = path_of(&[(0, 0), (1, 0), (2, 0)]);
        let c = canonical_embedding(&p).simplified();
        assert_eq!(c.vertices(), &[q(0, 0), q(2, 0)]);
    }

    #[test]
    fn singleton_embedding_is_a_point() {
        let p = path_of(&[(3, 4)]);
        let c = canonical_embedding(&p);
        assert!(c.is_degenerate());
        assert_eq!(c.first(), q(3, 4));
    }

    #[test]
    fn concat_joins_and_checks_endpoints() {
        let ab = PolyCurve::segment(q(0, 0), q(1, 0)).unwrap();
        let bc = PolyCurve::segment(q(1, 0), q(1, 1)).unwrap();
        let joined = concat(&[ab.clone(), bc]).unwrap();
        assert_eq!(joined.vertices(), &[q(0, 0), q(1, 0), q(1, 1)]);
        let cd = PolyCurve::segment(q(5, 5), q(6, 5)).unwrap();
        assert_eq!(concat(&[ab, cd]).unwrap_err(), GeomError::EndpointMismatch(1));
    }

    #[test]
    fn square_is_simple_closed_figure_eight_is_not() {
        assert!(is_simple_closed(&unit_square_ccw()));
        let eight = PolyCurve::new(vec![
            q(0, 0),
            q(1, 0),
            q(1, 1),
            q(0, 1), // back through the knot point
            q(0, 0),
            q(-1, 0),
            q(-1, -1),
            q(0, -1),
            q(0, 0),
        ])
        .unwrap();
        assert!(!is_simple_closed(&eight));
        let backtrack = PolyCurve::new(vec![q(0, 0), q(2, 0), q(1, 0), q(1, 1), q(0, 1), q(0, 0)]).unwrap();
        assert!(!is_simple_closed(&backtrack));
    }

    #[test]
    fn fig_style_16_tile_loop_is_simple_closed() {
        // the 16-tile example path closed with one vertical segment
        let p = path_of(&[
            (3, 4),
            (2, 4),
            (1, 4),
            (0, 4),
            (-1, 4),
            (-1, 3),
            (-1, 2),
            (0, 2),
            (0, 1),
            (1, 1),
            (2, 1),
            (2, 0),
            (3, 0),
            (3, 1),
            (3, 2),
            (3, 3),
        ]);
        let e = canonical_embedding(&p);
        let close = PolyCurve::segment(q(3, 3), q(3, 4)).unwrap();
        let c = concat(&[e, close]).unwrap();
        assert!(is_simple_closed(&c));
        // the loop runs clockwise... check which side is bounded instead of
        // guessing: LHS of this direction is the grey region of the figure
        assert!(lhs_is_bounded(&c).unwrap());
        assert_eq!(point_in_bounded_component(&c, q(1, 3)), Location::Inside);
        assert_eq!(point_in_bounded_component(&c, q(10, 10)), Location::Outside);
    }

    #[test]
    fn point_location_on_the_unit_square() {
        let c = unit_square_ccw();
        assert_eq!(point_in_bounded_component(&c, QPoint::new(2, 2)), Location::Inside);
        assert_eq!(point_in_bounded_component(&c, QPoint::new(10, 10)), Location::Outside);
        assert_eq!(point_in_bounded_component(&c, QPoint::new(2, 0)), Location::OnCurve);
        assert_eq!(point_in_bounded_component(&c, QPoint::new(0, 2)), Location::OnCurve);
    }

    #[test]
    fn lhs_of_ccw_loop_is_bounded_cw_is_not() {
        assert!(lhs_is_bounded(&unit_square_ccw()).unwrap());
        assert!(!lhs_is_bounded(&unit_square_ccw().reversed()).unwrap());
    }

    #[test]
    fn nano_embedding_of_east_run() {
        let p = path_of(&[(0, 0), (1, 0), (2, 0)]);
        let n = nano_embedding(&p);
        assert_eq!(n.vertices(), &[QPoint::new(0, -1), QPoint::new(8, -1)]);
    }

    #[test]
    fn nano_embedding_wraps_left_turns_and_cuts_right_turns() {
        // east then north: left turn, corner outside at (+0.25, -0.25)
        let left = path_of(&[(0, 0), (1, 0), (1, 1)]);
        let n = nano_embedding(&left);
        assert_eq!(n.vertices(), &[QPoint::new(0, -1), QPoint::new(5, -1), QPoint::new(5, 4)]);
        // east then south: right turn, corner cut at (-0.25, -0.25)
        let right = path_of(&[(0, 0), (1, 0), (1, -1)]);
        let n = nano_embedding(&right);
        assert_eq!(n.vertices(), &[QPoint::new(0, -1), QPoint::new(3, -1), QPoint::new(3, -4)]);
    }

    #[test]
    fn nano_stays_quarter_away_and_never_meets_the_embedding() {
        let p = path_of(&[(0, 0), (1, 0), (1, 1), (2, 1), (2, 0), (3, 0), (3, 1), (3, 2), (2, 2)]);
        let e = canonical_embedding(&p);
        let n = nano_embedding(&p);
        for v in n.vertices() {
            assert_eq!(linf_point_curve(*v, &e), 1, "vertex {v}");
        }
        assert!(!curves_intersect(&n, &e));
    }
}
