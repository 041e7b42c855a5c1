//! h-successful paths, enclosing branches, the pump-or-enclose decision
//! procedure, the path order, and the iterative all-paths blocker.
//!
//! Everything here is parametric in the configuration: the height line `h`,
//! the simulation zone, the vertical line and the separation bounds all have
//! full-scale defaults but are set to desk-scale values in tests, since the
//! full-scale constants are astronomically large for any nontrivial tileset.

mod cases;
mod decision;
mod order;
mod search;

pub use cases::{classify_residuals, BlockCase, CaseReport};
pub use decision::{
    pump_or_enclose, verify_enclosure, BranchKind, DecisionLeaf, DecisionReport, EnclosingBranch,
    PumpOrEnclose,
};
pub use order::path_order_cmp;
pub use search::enumerate_preferred_branches;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::model::{Assembly, Dir, Point, Tas, Tile, TileId};
use crate::path::{Path, PathError};
use crate::sim::{explore, SimError, SimZone};
use crate::visibility::VLine;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("enumeration exceeded the cap of {0} paths")]
    CapExceeded(usize),
    #[error("path never places a glue on the vertical line")]
    NoLineGlue,
    #[error("no equal-label visible pair exists on the scan side of the line")]
    SetupUnavailable,
    #[error("path is not h-successful for this configuration")]
    NotHSuccessful,
    #[error("configuration too small for the construction: {0}")]
    ConfigTooSmall(String),
    #[error("construction invariant violated: {0}")]
    InvariantViolation(String),
    #[error("direct conflict scan and geometric cross-check disagree: {0}")]
    CrossCheckMismatch(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Sim(#[from] SimError),
}

/// The set of grid cells growth is confined to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zone {
    cells: BTreeSet<Point>,
}

impl Zone {
    pub fn new(cells: BTreeSet<Point>) -> Zone {
        Zone { cells }
    }

    pub fn rect(x0: i32, y0: i32, x1: i32, y1: i32) -> Zone {
        let mut cells = BTreeSet::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                cells.insert(Point::new(x, y));
            }
        }
        Zone { cells }
    }

    pub fn from_sim_zone(z: &SimZone, m: i32) -> Zone {
        Zone { cells: z.cells(m) }
    }

    pub fn union(&self, other: &Zone) -> Zone {
        Zone { cells: self.cells.union(&other.cells).copied().collect() }
    }

    pub fn contains(&self, p: Point) -> bool {
        self.cells.contains(&p)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = Point> + '_ {
        self.cells.iter().copied()
    }
}

/// Parameters of the blocking machinery.
#[derive(Debug, Clone)]
pub struct BlockConfig {
    /// The height of the horizontal line h-successful paths reach.
    pub h: i32,
    pub zone: Zone,
    /// The vertical line glues are tracked on.
    pub line: VLine,
    /// Scale factor of the simulation being analyzed.
    pub m: i32,
    /// Minimum horizontal separation of the pumping pair.
    pub min_sep: i32,
    /// Maximum vertical separation of the pumping pair.
    pub max_vsep: i32,
}

impl BlockConfig {
    /// Full-scale defaults: `h = 10m`, line at `|U|(3m+1) + m + 1.5`, and
    /// both separations `3m`.
    pub fn full_scale(tileset_size: usize, m: i32, zone: Zone) -> BlockConfig {
        let line_x = tileset_size as i64 * (3 * m as i64 + 1) + m as i64 + 1;
        BlockConfig {
            h: 10 * m,
            zone,
            line: VLine { x2: 2 * line_x + 1 },
            m,
            min_sep: 3 * m,
            max_vsep: 3 * m,
        }
    }

    pub(crate) fn setup(&self) -> crate::visibility::SetupConfig {
        crate::visibility::SetupConfig { line: self.line, min_sep: self.min_sep, max_vsep: self.max_vsep }
    }
}

/// True iff `p` is producible, stays in the zone, and its unique tile at
/// height `h` is its last tile.
pub fn is_h_successful(tas: &Tas, p: &Path, cfg: &BlockConfig) -> bool {
    if !crate::path::is_producible_path(tas, p) {
        return false;
    }
    if p.positions().any(|pos| !cfg.zone.contains(pos)) {
        return false;
    }
    let at_h: Vec<usize> = (0..p.len()).filter(|&k| p.tile(k).pos.y == cfg.h).collect();
    at_h == [p.len() - 1]
}

/// Exhaustive depth-first enumeration of the h-successful paths: producible
/// paths inside the zone, pruned at height `h`. Errors once more than `cap`
/// paths have been found.
pub fn enumerate_h_successful(tas: &Tas, cfg: &BlockConfig, cap: usize) -> Result<Vec<Path>, BlockError> {
    let seed = tas.seed();
    let mut out = Vec::new();
    let starts: Vec<(Point, TileId)> = tas
        .frontier(seed)
        .into_iter()
        .filter(|(pos, _)| cfg.zone.contains(*pos) && pos.y <= cfg.h)
        .collect();

    struct Dfs<'a> {
        tas: &'a Tas,
        cfg: &'a BlockConfig,
        cap: usize,
    }
    impl Dfs<'_> {
        fn run(
            &self,
            tiles: &mut Vec<Tile>,
            used: &mut BTreeSet<Point>,
            out: &mut Vec<Path>,
        ) -> Result<(), BlockError> {
            let last = *tiles.last().unwrap();
            if last.pos.y == self.cfg.h {
                if out.len() >= self.cap {
                    return Err(BlockError::CapExceeded(self.cap));
                }
                out.push(Path::new_unchecked(tiles.clone()));
                return Ok(());
            }
            for d in Dir::ALL {
                let pos = last.pos.neighbor(d);
                if used.contains(&pos)
                    || self.tas.seed().contains(pos)
                    || !self.cfg.zone.contains(pos)
                    || pos.y > self.cfg.h
                {
                    continue;
                }
                for id in 0..self.tas.tile_count() {
                    let ty = TileId(id);
                    if !self.tas.binds(last.ty, d, ty) {
                        continue;
                    }
                    tiles.push(Tile::new(pos, ty));
                    used.insert(pos);
                    self.run(tiles, used, out)?;
                    used.remove(&pos);
                    tiles.pop();
                }
            }
            Ok(())
        }
    }

    let dfs = Dfs { tas, cfg, cap };
    for (pos, ty) in starts {
        let mut tiles = vec![Tile::new(pos, ty)];
        let mut used = BTreeSet::from([pos]);
        dfs.run(&mut tiles, &mut used, &mut out)?;
    }
    Ok(out)
}

/// One blocked path: its decision report and the prefix of its blocking
/// branch that actually grew into the assembly.
#[derive(Debug, Clone)]
pub struct BlockedPath {
    pub path: Path,
    pub report: DecisionReport,
    /// The grown prefix `F` of `E = P_{0..k} D_{0..|D|-2}`.
    pub grown: Path,
}

/// The evolving blocker assembly together with its per-path branches.
#[derive(Debug, Clone)]
pub struct BlockerState {
    pub alpha: Assembly,
    pub records: Vec<BlockedPath>,
    /// Which record placed each non-seed tile of `alpha`.
    pub owner: BTreeMap<Point, usize>,
}

/// Outcome of blocking every h-successful path.
#[derive(Debug)]
pub enum BlockAllOutcome {
    AllBlocked(Box<BlockerState>),
    /// A producible path placing a tile outside the zone was found; this
    /// short-circuits the whole construction.
    EscapesZone(Path),
}

/// Enumerates the h-successful paths, sorts them by the path order, and grows
/// the maximal producible prefix of each blocking branch in turn.
pub fn block_all(tas: &Tas, cfg: &BlockConfig, cap: usize) -> Result<BlockAllOutcome, BlockError> {
    let mut paths = enumerate_h_successful(tas, cfg, cap)?;
    // the order needs every path to cross the line
    for p in &paths {
        if crate::visibility::visible_glue_on_line(tas, p, cfg.line).is_none() {
            return Err(BlockError::NoLineGlue);
        }
    }
    let mut order_err = None;
    paths.sort_by(|a, b| match path_order_cmp(tas, a, b, cfg) {
        Ok(o) => o,
        Err(e) => {
            order_err.get_or_insert(e);
            std::cmp::Ordering::Equal
        }
    });
    if let Some(e) = order_err {
        return Err(e);
    }

    let mut alpha = tas.seed().clone();
    let mut owner = BTreeMap::new();
    let mut records = Vec::new();
    for (n, p) in paths.into_iter().enumerate() {
        let report = pump_or_enclose(tas, &p, cfg)?;
        let eb = match &report.outcome {
            PumpOrEnclose::EscapesZone(w) => return Ok(BlockAllOutcome::EscapesZone(w.clone())),
            PumpOrEnclose::Encloses(eb) => eb.clone(),
        };
        // E = P_{0..k} . D_{0..|D|-2}; grow its maximal prefix from alpha
        let mut e_tiles: Vec<Tile> = p.tiles()[..=eb.k].to_vec();
        e_tiles.extend_from_slice(&eb.branch.tiles()[..eb.branch.len() - 1]);
        let mut grown = Vec::new();
        for t in e_tiles {
            match alpha.get(t.pos) {
                Some(existing) if existing == t.ty => grown.push(t),
                Some(_) => break,
                None => {
                    alpha.place(t.pos, t.ty);
                    owner.insert(t.pos, n);
                    grown.push(t);
                }
            }
        }
        records.push(BlockedPath { path: p, report, grown: Path::new_unchecked(grown) });
    }
    Ok(BlockAllOutcome::AllBlocked(Box::new(BlockerState { alpha, records, owner })))
}

/// Diagnostic probe for the Manhattan-distance conjecture: the maximum
/// distance from the seed over the tiles of all depth-bounded terminal
/// assemblies. `truncated` flags systems whose exploration hit the depth
/// bound while still growing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadiusReport {
    pub radius: i32,
    pub truncated: bool,
}

pub fn manhattan_radius(tas: &Tas, depth: usize, cap: usize) -> Result<RadiusReport, BlockError> {
    let explored = explore(tas, depth, cap)?;
    let seed_cells: Vec<Point> = tas.seed().domain().collect();
    let dist = |p: Point| seed_cells.iter().map(|s| p.manhattan(*s)).min().unwrap();
    let radius = explored
        .bounded_terminal
        .iter()
        .flat_map(|a| a.domain().map(dist).collect::<Vec<_>>())
        .max()
        .unwrap_or(0);
    Ok(RadiusReport { radius, truncated: explored.truncated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Glue, TileType};
    use crate::sim::gen_tn;

    /// seed -> east run with single repeated tile that can also rise to h.
    pub(crate) fn ladder_tas() -> Tas {
        let s = TileType::new("s", Glue::blank(), Glue::new("a"), Glue::blank(), Glue::blank());
        let t = TileType::new("t", Glue::new("k"), Glue::new("a"), Glue::blank(), Glue::new("a"));
        let u = TileType::new("u", Glue::new("k"), Glue::blank(), Glue::new("k"), Glue::blank());
        Tas::new(vec![s, t, u], Assembly::single(Point::new(0, 0), TileId(0)), 1).unwrap()
    }

    #[test]
    fn h_successful_requires_unique_final_h_tile() {
        let tas = ladder_tas();
        let cfg = BlockConfig {
            h: 3,
            zone: Zone::rect(-1, 0, 8, 3),
            line: VLine::east_of_column(0),
            m: 1,
            min_sep: 1,
            max_vsep: 1,
        };
        // east 2 then up to h
        let mut tiles = vec![
            Tile::new(Point::new(1, 0), TileId(1)),
            Tile::new(Point::new(2, 0), TileId(1)),
        ];
        tiles.push(Tile::new(Point::new(2, 1), TileId(2)));
        tiles.push(Tile::new(Point::new(2, 2), TileId(2)));
        tiles.push(Tile::new(Point::new(2, 3), TileId(2)));
        let p = Path::new(tiles.clone(), &tas).unwrap();
        assert!(is_h_successful(&tas, &p, &cfg));
        // not at h at all
        let low = Path::new(tiles[..2].to_vec(), &tas).unwrap();
        assert!(!is_h_successful(&tas, &low, &cfg));
    }

    #[test]
    fn enumeration_matches_bfs_oracle_on_branching_fixture() {
        let tas = ladder_tas();
        let cfg = BlockConfig {
            h: 2,
            zone: Zone::rect(-1, 0, 4, 2),
            line: VLine::east_of_column(0),
            m: 1,
            min_sep: 1,
            max_vsep: 1,
        };
        let got = enumerate_h_successful(&tas, &cfg, 10_000).unwrap();
        // independent breadth-first enumeration
        let mut layer: Vec<Vec<Tile>> = tas
            .frontier(tas.seed())
            .into_iter()
            .filter(|(pos, _)| cfg.zone.contains(*pos) && pos.y <= cfg.h)
            .map(|(pos, ty)| vec![Tile::new(pos, ty)])
            .collect();
        let mut expect = Vec::new();
        while let Some(tiles) = layer.pop() {
            let last = *tiles.last().unwrap();
            if last.pos.y == cfg.h {
                expect.push(Path::new_unchecked(tiles));
                continue;
            }
            for d in Dir::ALL {
                let pos = last.pos.neighbor(d);
                if tiles.iter().any(|t| t.pos == pos)
                    || tas.seed().contains(pos)
                    || !cfg.zone.contains(pos)
                    || pos.y > cfg.h
                {
                    continue;
                }
                for id in 0..tas.tile_count() {
                    if tas.binds(last.ty, d, TileId(id)) {
                        let mut next = tiles.clone();
                        next.push(Tile::new(pos, TileId(id)));
                        layer.push(next);
                    }
                }
            }
        }
        let got_set: BTreeSet<Vec<Tile>> = got.iter().map(|p| p.tiles().to_vec()).collect();
        let expect_set: BTreeSet<Vec<Tile>> = expect.iter().map(|p| p.tiles().to_vec()).collect();
        assert_eq!(got_set, expect_set);
        assert!(!got.is_empty());
        for p in &got {
            assert!(is_h_successful(&tas, p, &cfg));
        }
    }

    #[test]
    fn enumeration_is_empty_when_tiles_cannot_rise() {
        let s = TileType::new("s", Glue::blank(), Glue::new("a"), Glue::blank(), Glue::blank());
        let t = TileType::new("t", Glue::blank(), Glue::new("a"), Glue::blank(), Glue::new("a"));
        let tas = Tas::new(vec![s, t], Assembly::single(Point::new(0, 0), TileId(0)), 1).unwrap();
        let cfg = BlockConfig {
            h: 2,
            zone: Zone::rect(-1, 0, 6, 2),
            line: VLine::east_of_column(0),
            m: 1,
            min_sep: 1,
            max_vsep: 1,
        };
        assert!(enumerate_h_successful(&tas, &cfg, 100).unwrap().is_empty());
    }

    #[test]
    fn cap_guard_fires() {
        let tas = ladder_tas();
        let cfg = BlockConfig {
            h: 3,
            zone: Zone::rect(-1, 0, 10, 3),
            line: VLine::east_of_column(0),
            m: 1,
            min_sep: 1,
            max_vsep: 1,
        };
        assert_eq!(enumerate_h_successful(&tas, &cfg, 2).unwrap_err(), BlockError::CapExceeded(2));
    }

    #[test]
    fn manhattan_radius_of_flipped_l_truncation() {
        let tas = gen_tn(5);
        let r = manhattan_radius(&tas, 20, 100_000).unwrap();
        // the horizontal arm contributes 6, the rest of the 20 steps go north
        assert_eq!(r.radius, 20);
        assert!(r.truncated);
    }

    #[test]
    fn manhattan_radius_zero_for_terminal_seed() {
        let s = TileType::blank("s");
        let tas = Tas::new(vec![s], Assembly::single(Point::new(0, 0), TileId(0)), 1).unwrap();
        let r = manhattan_radius(&tas, 10, 100).unwrap();
        assert_eq!(r, RadiusReport { radius: 0, truncated: false });
    }

    #[test]
    fn manhattan_radius_grows_with_depth_for_infinite_chain() {
        let s = TileType::new("s", Glue::blank(), Glue::new("a"), Glue::blank(), Glue::blank());
        let t = TileType::new("t", Glue::blank(), Glue::new("a"), Glue::blank(), Glue::new("a"));
        let tas = Tas::new(vec![s, t], Assembly::single(Point::new(0, 0), TileId(0)), 1).unwrap();
        let r10 = manhattan_radius(&tas, 10, 1000).unwrap();
        let r15 = manhattan_radius(&tas, 15, 1000).unwrap();
        assert!(r10.truncated && r15.truncated);
        assert_eq!(r10.radius, 10);
        assert_eq!(r15.radius, 15);
    }
}
