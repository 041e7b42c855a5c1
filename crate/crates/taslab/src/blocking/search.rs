//! Exhaustive search for h-successful continuations branching off a stem
//! path, ordered so the most right-priority (or left-priority) element is
//! found first.
//!
//! A stem is a reference chain of tiles; candidates follow it exactly up to
//! some index and then deviate with a move strictly on the preferred side of
//! the stem's own move. Children are explored most-clockwise-first (or
//! counterclockwise for the left-handed search) with tile-type ties broken by
//! canonical order, which makes depth-first discovery order coincide with the
//! priority order of the results.

use std::collections::BTreeSet;

use crate::geom::QPoint;
use crate::model::{Dir, Point, Tas, Tile, TileId};
use crate::path::{Chirality, Path};

use super::{BlockConfig, BlockError};

/// A glue-column floor: pruning bound `(column qx, minimum qy)`. Any new glue
/// midpoint on the column strictly below the floor makes every extension of
/// the candidate fail its leaf filters, so the branch is cut immediately.
pub(crate) type Floor = (i64, i64);

pub(crate) struct BranchSearch<'a> {
    pub tas: &'a Tas,
    pub cfg: &'a BlockConfig,
    pub chirality: Chirality,
    /// Reference chain: a producible path plus, as its last element, the
    /// offending tile growth stopped at (used only as a turn reference).
    pub stem: Vec<Tile>,
    /// Smallest stem index whose tile may be replaced by a deviation.
    pub dev_min: usize,
    pub floors: Vec<Floor>,
    /// Leaf filter: this glue edge must stay visible relative to the found
    /// path (its southward ray must meet no other glue midpoint).
    pub visible_edge: Option<(Point, Point)>,
    /// Leaf filter: the found path's visible glue on the configured line must
    /// sit exactly at this midpoint.
    pub line_glue: Option<QPoint>,
}

/// A found branch: the full path together with the stem index it deviated at.
#[derive(Debug, Clone)]
pub(crate) struct FoundBranch {
    pub path: Path,
    pub deviation: usize,
}

enum Goal {
    First,
    All { cap: usize },
}

impl BranchSearch<'_> {
    /// The most preferred-priority element of the candidate set, if any.
    pub fn find_first(&self) -> Option<FoundBranch> {
        let mut found = Vec::new();
        self.search(Goal::First, &mut found).expect("first-mode search cannot exceed a cap");
        found.pop()
    }

    /// Every candidate, in priority order.
    pub fn collect_all(&self, cap: usize) -> Result<Vec<FoundBranch>, BlockError> {
        let mut found = Vec::new();
        self.search(Goal::All { cap }, &mut found)?;
        Ok(found)
    }

    fn search(&self, goal: Goal, found: &mut Vec<FoundBranch>) -> Result<(), BlockError> {
        debug_assert!(self.dev_min >= 2, "deviations need two fixed predecessors");
        // glue midpoints of the stem prefix must respect the floors; once a
        // prefix violates them every later deviation does too
        let mut prefix_ok = vec![true; self.stem.len() + 1];
        for d in 2..=self.stem.len() {
            let ok = prefix_ok[d - 1]
                && (d < 2 || self.glue_floor_ok(self.stem[d - 2].pos, self.stem[d - 1].pos));
            prefix_ok[d] = ok;
        }
        for d in self.dev_min..self.stem.len() {
            if !prefix_ok[d] {
                break;
            }
            let anchor = self.stem[d - 1];
            let back = Dir::from_step(self.stem[d - 2].pos - anchor.pos).unwrap();
            let reference = Dir::from_step(self.stem[d].pos - anchor.pos).unwrap();
            let mut moves: Vec<Dir> = Dir::ALL
                .into_iter()
                .filter(|m| self.chirality.turns_preferred(back, reference, *m))
                .collect();
            moves.sort_by_key(|m| self.chirality.rank(back, *m).unwrap());
            let prefix: Vec<Tile> = self.stem[..d].to_vec();
            let mut used: BTreeSet<Point> = prefix.iter().map(|t| t.pos).collect();
            for m in moves {
                let pos = anchor.pos.neighbor(m);
                if !self.position_free(&used, pos) {
                    continue;
                }
                for id in 0..self.tas.tile_count() {
                    let ty = TileId(id);
                    if !self.tas.binds(anchor.ty, m, ty) {
                        continue;
                    }
                    if !self.glue_floor_ok(anchor.pos, pos) {
                        continue;
                    }
                    let mut tiles = prefix.clone();
                    tiles.push(Tile::new(pos, ty));
                    used.insert(pos);
                    let done = self.extend(&mut tiles, &mut used, d, &goal, found)?;
                    used.remove(&pos);
                    if done {
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }

    /// Depth-first continuation; returns true once the goal is satisfied.
    fn extend(
        &self,
        tiles: &mut Vec<Tile>,
        used: &mut BTreeSet<Point>,
        deviation: usize,
        goal: &Goal,
        found: &mut Vec<FoundBranch>,
    ) -> Result<bool, BlockError> {
        let last = *tiles.last().unwrap();
        if last.pos.y == self.cfg.h {
            let path = Path::new_unchecked(tiles.clone());
            if self.leaf_accepts(&path) {
                found.push(FoundBranch { path, deviation });
                match goal {
                    Goal::First => return Ok(true),
                    Goal::All { cap } => {
                        if found.len() > *cap {
                            return Err(BlockError::CapExceeded(*cap));
                        }
                    }
                }
            }
            return Ok(false);
        }
        let back = Dir::from_step(tiles[tiles.len() - 2].pos - last.pos).unwrap();
        let mut moves: Vec<Dir> = Dir::ALL.into_iter().filter(|m| *m != back).collect();
        moves.sort_by_key(|m| self.chirality.rank(back, *m).unwrap());
        for m in moves {
            let pos = last.pos.neighbor(m);
            if !self.position_free(used, pos) || !self.glue_floor_ok(last.pos, pos) {
                continue;
            }
            for id in 0..self.tas.tile_count() {
                let ty = TileId(id);
                if !self.tas.binds(last.ty, m, ty) {
                    continue;
                }
                tiles.push(Tile::new(pos, ty));
                used.insert(pos);
                let done = self.extend(tiles, used, deviation, goal, found)?;
                used.remove(&pos);
                tiles.pop();
                if done {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn position_free(&self, used: &BTreeSet<Point>, pos: Point) -> bool {
        !used.contains(&pos)
            && !self.tas.seed().contains(pos)
            && self.cfg.zone.contains(pos)
            && pos.y <= self.cfg.h
    }

    fn glue_floor_ok(&self, a: Point, b: Point) -> bool {
        let mid = QPoint::new((a.x as i64 + b.x as i64) * 2, (a.y as i64 + b.y as i64) * 2);
        self.floors.iter().all(|&(qx, qy)| mid.qx != qx || mid.qy >= qy)
    }

    fn leaf_accepts(&self, path: &Path) -> bool {
        if let Some((from, to)) = self.visible_edge {
            if !edge_glue_visible(self.tas, path, from, to) {
                return false;
            }
        }
        if let Some(required) = self.line_glue {
            match crate::visibility::visible_glue_on_line(self.tas, path, self.cfg.line) {
                Some(vg) if vg.glue.midpoint() == required => {}
                _ => return false,
            }
        }
        true
    }
}

/// True iff the southward ray from the midpoint of the `from -> to` edge
/// meets no other glue midpoint of the path.
pub(crate) fn edge_glue_visible(tas: &Tas, path: &Path, from: Point, to: Point) -> bool {
    let mid = QPoint::new((from.x as i64 + to.x as i64) * 2, (from.y as i64 + to.y as i64) * 2);
    path.glues(tas).all(|g| {
        let gm = g.midpoint();
        gm == mid || gm.qx != mid.qx || gm.qy >= mid.qy
    })
}

/// Enumerates every h-successful path that branches off `P_{0..k} D_{0..|D|-2}`
/// on the preferred side: candidates follow the combined path and deviate
/// with a move strictly clockwise (for the right-handed sense) of the
/// branch's own continuation at that point.
///
/// This is the exhaustive continuation check used to validate an enclosing
/// branch's guarantee: each returned path must either hide the branching glue
/// or place a lower glue on the line.
pub fn enumerate_preferred_branches(
    tas: &Tas,
    cfg: &BlockConfig,
    chirality: Chirality,
    prefix: &Path,
    k: usize,
    branch: &Path,
    cap: usize,
) -> Result<Vec<Path>, BlockError> {
    let mut stem: Vec<Tile> = prefix.tiles()[..=k].to_vec();
    stem.extend_from_slice(branch.tiles());
    let search = BranchSearch {
        tas,
        cfg,
        chirality,
        stem,
        dev_min: k + 2,
        floors: Vec::new(),
        visible_edge: None,
        line_glue: None,
    };
    Ok(search.collect_all(cap)?.into_iter().map(|f| f.path).collect())
}
