//! Glue visibility from the south: visible glues, the V+/V- partition,
//! visible glues on a vertical line, and the pigeonhole pair setup used by
//! the blocking machinery.
//!
//! A glue of a path is visible when the vertical ray going south from its
//! midpoint meets no other glue midpoint of the same path. Horizontal-step
//! visible glues split into `Plus` (east) and `Minus` (west); vertical-step
//! glues are tagged separately. The ordering lemmas and the blocker only ever
//! consume glues on a half-integer line, which are necessarily horizontal
//! steps, so the vertical tag never feeds those algorithms.

use std::collections::BTreeMap;

use crate::geom::QPoint;
use crate::model::{Dir, Tas};
use crate::path::{Path, PathGlue};

/// Orientation class of a visible glue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Horizontal east step.
    Plus,
    /// Horizontal west step.
    Minus,
    /// Vertical step; north steps classify with plus, south with minus, when
    /// a total two-way split is needed.
    Vertical,
}

/// A glue visible from the south, with the origin of its visibility ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisibleGlue {
    pub glue: PathGlue,
    pub orientation: Orientation,
}

impl VisibleGlue {
    pub fn ray_origin(&self) -> QPoint {
        self.glue.midpoint()
    }

    /// Two-way classification with vertical steps folded in: north counts as
    /// plus, south as minus.
    pub fn signed_class(&self) -> Orientation {
        match self.glue.direction() {
            Dir::East | Dir::North => Orientation::Plus,
            Dir::West | Dir::South => Orientation::Minus,
        }
    }
}

/// The visible glues of a path, partitioned by orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisibilitySet {
    pub all: Vec<VisibleGlue>,
    pub plus: Vec<VisibleGlue>,
    pub minus: Vec<VisibleGlue>,
}

impl VisibilitySet {
    pub fn is_visible(&self, index: usize) -> bool {
        self.all.iter().any(|v| v.glue.index == index)
    }
}

/// Computes the visible glues of `p`: glue `(i, i+1)` is visible iff no other
/// glue midpoint of `p` lies strictly south on the same vertical.
pub fn visible_glues(tas: &Tas, p: &Path) -> VisibilitySet {
    assert!(p.len() >= 2, "visibility needs at least one glue");
    // lowest midpoint per x-column; distinct glues always have distinct
    // midpoints, so the minimum is unique
    let mut lowest: BTreeMap<i64, i64> = BTreeMap::new();
    let glues: Vec<PathGlue> = p.glues(tas).collect();
    for g in &glues {
        let m = g.midpoint();
        lowest
            .entry(m.qx)
            .and_modify(|y| *y = (*y).min(m.qy))
            .or_insert(m.qy);
    }
    let mut all = Vec::new();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for g in &glues {
        let m = g.midpoint();
        if lowest[&m.qx] != m.qy {
            continue;
        }
        let orientation = match g.direction() {
            Dir::East => Orientation::Plus,
            Dir::West => Orientation::Minus,
            Dir::North | Dir::South => Orientation::Vertical,
        };
        let vg = VisibleGlue { glue: g.clone(), orientation };
        match orientation {
            Orientation::Plus => plus.push(vg.clone()),
            Orientation::Minus => minus.push(vg.clone()),
            Orientation::Vertical => {}
        }
        all.push(vg);
    }
    VisibilitySet { all, plus, minus }
}

/// True iff the given glue of `p` is visible relative to `p`.
pub fn glue_is_visible(tas: &Tas, p: &Path, index: usize) -> bool {
    let g = p.glue_at(index, tas);
    let m = g.midpoint();
    p.glues(tas)
        .all(|other| other.index == index || {
            let om = other.midpoint();
            om.qx != m.qx || om.qy >= m.qy
        })
}

/// A vertical line at a half-integer x-coordinate, stored doubled so the
/// coordinate stays an (odd) integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VLine {
    pub x2: i64,
}

impl VLine {
    /// Line at `x = x2 / 2`. The coordinate must be a half-integer.
    pub fn at_half(x2: i64) -> VLine {
        assert!(x2.rem_euclid(2) == 1, "line must sit at a half-integer x");
        VLine { x2 }
    }

    /// Line immediately east of column `x`, i.e. at `x + 1/2`.
    pub fn east_of_column(x: i32) -> VLine {
        VLine { x2: x as i64 * 2 + 1 }
    }

    /// The line's x-coordinate in quarter units.
    pub fn qx(&self) -> i64 {
        self.x2 * 2
    }
}

/// The visible (lowest) glue of `p` on the line, or `None` when the embedding
/// never meets it. Only horizontal steps can sit on a half-integer line.
pub fn visible_glue_on_line(tas: &Tas, p: &Path, line: VLine) -> Option<VisibleGlue> {
    let mut best: Option<PathGlue> = None;
    for g in p.glues(tas) {
        let m = g.midpoint();
        if m.qx != line.qx() {
            continue;
        }
        if best.as_ref().is_none_or(|b| m.qy < b.midpoint().qy) {
            best = Some(g);
        }
    }
    best.map(|g| {
        let orientation = match g.direction() {
            Dir::East => Orientation::Plus,
            Dir::West => Orientation::Minus,
            _ => unreachable!("half-integer lines only meet horizontal steps"),
        };
        VisibleGlue { glue: g, orientation }
    })
}

/// Configuration for the pigeonhole pair search.
#[derive(Debug, Clone, Copy)]
pub struct SetupConfig {
    pub line: VLine,
    /// Minimum horizontal distance between the two chosen tiles.
    pub min_sep: i32,
    /// Maximum vertical distance between them.
    pub max_vsep: i32,
}

impl SetupConfig {
    /// The constants used at full scale: line at `|U|(3m+1) + m + 1.5`,
    /// separations both `3m`.
    pub fn full_scale(tileset_size: usize, m: i32) -> SetupConfig {
        let x = tileset_size as i64 * (3 * m as i64 + 1) + m as i64 + 1;
        SetupConfig { line: VLine { x2: 2 * x + 1 }, min_sep: 3 * m, max_vsep: 3 * m }
    }
}

/// Finds indices `i < j` of two equal-label visible glues on the relevant
/// side of the line: the scan side is right of the line when the path's
/// visible glue on the line is plus-oriented, left when minus.
///
/// Candidates are scanned outward from the line in x-order and the first
/// qualifying pair is returned, which makes the choice deterministic. Returns
/// `None` when the path misses the line or no pair exists (possible only in
/// scaled-down configurations).
pub fn visibility_setup(tas: &Tas, p: &Path, cfg: &SetupConfig) -> Option<(usize, usize)> {
    let on_line = visible_glue_on_line(tas, p, cfg.line)?;
    let vis = visible_glues(tas, p);
    let qline = cfg.line.qx();
    let (pool, outward_key): (&[VisibleGlue], fn(i64) -> i64) = match on_line.orientation {
        Orientation::Plus => (&vis.plus, |qx| qx),
        Orientation::Minus => (&vis.minus, |qx| -qx),
        Orientation::Vertical => unreachable!(),
    };
    // keep glues whose tile P_i is strictly on the scan side of the line
    let mut candidates: Vec<&VisibleGlue> = pool
        .iter()
        .filter(|vg| {
            let tile_qx = QPoint::from_cell(vg.glue.from).qx;
            match on_line.orientation {
                Orientation::Plus => tile_qx > qline,
                Orientation::Minus => tile_qx < qline,
                Orientation::Vertical => unreachable!(),
            }
        })
        .collect();
    candidates.sort_by_key(|vg| outward_key(vg.glue.midpoint().qx));
    for (a_idx, a) in candidates.iter().enumerate() {
        for b in candidates.iter().skip(a_idx + 1) {
            if a.glue.label != b.glue.label {
                continue;
            }
            let (pa, pb) = (a.glue.from, b.glue.from);
            if (pa.x - pb.x).abs() < cfg.min_sep || (pa.y - pb.y).abs() > cfg.max_vsep {
                continue;
            }
            let (i, j) = (a.glue.index.min(b.glue.index), a.glue.index.max(b.glue.index));
            if i == j {
                continue;
            }
            return Some((i, j));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Assembly, Glue, Point, Tas, Tile, TileId, TileType};
    use crate::path::Path;

    /// A permissive tileset: one universal tile binding on all sides, so any
    /// connected simple sequence is a path.
    fn free_tas() -> Tas {
        let s = TileType::new("s", Glue::new("u"), Glue::new("u"), Glue::new("u"), Glue::new("u"));
        let t = TileType::new("t", Glue::new("u"), Glue::new("u"), Glue::new("u"), Glue::new("u"));
        Tas::new(vec![s, t], Assembly::single(Point::new(100, 100), TileId(0)), 1).unwrap()
    }

    fn path_of(tas: &Tas, points: &[(i32, i32)]) -> Path {
        Path::new(
            points.iter().map(|&(x, y)| Tile::new(Point::new(x, y), TileId(1))).collect(),
            tas,
        )
        .unwrap()
    }

    #[test]
    fn east_run_has_all_glues_visible_and_plus() {
        let tas = free_tas();
        let p = path_of(&tas, &[(0, 0), (1, 0), (2, 0), (3, 0)]);
        let v = visible_glues(&tas, &p);
        assert_eq!(v.all.len(), 3);
        assert_eq!(v.plus.len(), 3);
        assert!(v.minus.is_empty());
    }

    #[test]
    fn north_run_shadows_higher_glues() {
        let tas = free_tas();
        let p = path_of(&tas, &[(0, 0), (0, 1), (0, 2), (0, 3)]);
        let v = visible_glues(&tas, &p);
        assert_eq!(v.all.len(), 1);
        assert_eq!(v.all[0].glue.index, 0);
        assert_eq!(v.all[0].orientation, Orientation::Vertical);
    }

    #[test]
    fn l_path_visibility_matches_ray_oracle() {
        let tas = free_tas();
        let p = path_of(&tas, &[(0, 0), (1, 0), (2, 0), (2, 1), (1, 1)]);
        let v = visible_glues(&tas, &p);
        let indices: Vec<usize> = v.all.iter().map(|g| g.glue.index).collect();
        assert_eq!(indices, vec![0, 1, 2]);
        assert_eq!(v.all[0].orientation, Orientation::Plus);
        assert_eq!(v.all[1].orientation, Orientation::Plus);
        assert_eq!(v.all[2].orientation, Orientation::Vertical);
        // glue (3,4) is hidden by glue (1,2) on the same column
        assert!(!visible_glues(&tas, &p).is_visible(3));
        assert!(!glue_is_visible(&tas, &p, 3));
    }

    #[test]
    fn line_glue_is_the_lowest_crossing() {
        let tas = free_tas();
        // crosses x = 2.5 three times: at y=0 (east), y=2 (west), y=4 (east)
        let p = path_of(
            &tas,
            &[
                (0, 0),
                (1, 0),
                (2, 0),
                (3, 0),
                (3, 1),
                (3, 2),
                (2, 2),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 4),
                (3, 4),
            ],
        );
        let line = VLine::east_of_column(2);
        let vg = visible_glue_on_line(&tas, &p, line).unwrap();
        assert_eq!(vg.glue.index, 2);
        assert_eq!(vg.orientation, Orientation::Plus);
        // a path left of the line has no crossing
        let left = path_of(&tas, &[(0, 0), (1, 0)]);
        assert!(visible_glue_on_line(&tas, &left, line).is_none());
    }

    #[test]
    fn setup_returns_first_qualifying_pair_in_scan_order() {
        // east run with labelled glues: the glue after the tiles at x = 10,
        // 13, 16, 19 carries label "g"; everything else is distinct.
        let east_label = |x: i32| {
            if [10, 13, 16, 19].contains(&x) {
                "g".to_owned()
            } else {
                format!("w{x}")
            }
        };
        let mut types = vec![TileType::new("launch", Glue::blank(), Glue::new(&east_label(8)), Glue::blank(), Glue::blank())];
        for x in 9..=20 {
            types.push(TileType::new(
                &format!("t{x}"),
                Glue::blank(),
                Glue::new(&east_label(x)),
                Glue::blank(),
                Glue::new(&east_label(x - 1)),
            ));
        }
        let tas = Tas::new(types, Assembly::single(Point::new(8, 0), TileId(0)), 1).unwrap();
        let tiles: Vec<Tile> = (9..=20).map(|x| Tile::new(Point::new(x, 0), TileId((x - 8) as usize))).collect();
        let p = Path::new(tiles, &tas).unwrap();
        let cfg = SetupConfig { line: VLine::east_of_column(9), min_sep: 3, max_vsep: 3 };
        let (i, j) = visibility_setup(&tas, &p, &cfg).unwrap();
        // path index of the tile at x equals x - 9; the pair is the g-glues
        // leaving x=10 and x=13
        assert_eq!((i, j), (1, 4));
    }

    #[test]
    fn setup_absent_when_labels_never_repeat() {
        let tas = free_tas();
        // all glues share one label here, so build a distinct-label run instead
        let mut types = vec![TileType::new("s", Glue::blank(), Glue::new("a0"), Glue::blank(), Glue::blank())];
        for k in 1..6 {
            types.push(TileType::new(
                &format!("t{k}"),
                Glue::blank(),
                Glue::new(&format!("a{k}")),
                Glue::blank(),
                Glue::new(&format!("a{}", k - 1)),
            ));
        }
        let tas2 = Tas::new(types, Assembly::single(Point::new(0, 0), TileId(0)), 1).unwrap();
        let tiles: Vec<Tile> = (1..6).map(|x| Tile::new(Point::new(x, 0), TileId(x as usize))).collect();
        let p = Path::new(tiles, &tas2).unwrap();
        let cfg = SetupConfig { line: VLine::east_of_column(0), min_sep: 1, max_vsep: 3 };
        assert!(visibility_setup(&tas2, &p, &cfg).is_none());
        drop(tas);
    }
}
