//! The pump-or-enclose decision procedure and enclosure verification.
//!
//! Given an h-successful path, either a producible path is exhibited that
//! places a tile outside the zone, or an enclosing branch is constructed: a
//! producible branch off the path that re-encloses a region, certifying the
//! path can be blocked. The branch is found by pumping the path between the
//! visibility-setup pair, searching for preferred-side escapes of that
//! pumping, and translating candidate branches back and forth by the period
//! vector.

use std::collections::BTreeSet;

use crate::geom::{
    canonical_embedding, concat, is_simple_closed, point_in_bounded_component, Location, PolyCurve,
    QPoint,
};
use crate::model::{Dir, Point, Tas, Tile, Vec2};
use crate::path::{pumping_tile, Chirality, Path, PumpSpec};
use crate::visibility::{visibility_setup, visible_glue_on_line, Orientation};

use super::search::{edge_glue_visible, BranchSearch, FoundBranch};
use super::{is_h_successful, BlockConfig, BlockError};

/// How an enclosing branch closes off its region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchKind {
    /// The branch's last tile intersects the seed or the kept prefix of the
    /// blocked path.
    HitsPrefix,
    /// The branch's last glue sits on the vertical line strictly below every
    /// crossing of the blocked path.
    BelowLine,
}

/// An enclosing branch for a path at index `k`: the branch tiles `D_0 ..
/// D_{|D|-1}`, of which all but the last grow; the last records where growth
/// was cut off.
#[derive(Debug, Clone)]
pub struct EnclosingBranch {
    pub k: usize,
    pub branch: Path,
    pub kind: BranchKind,
}

impl EnclosingBranch {
    /// The growable part `D_0 .. D_{|D|-2}`.
    pub fn body(&self) -> Path {
        self.branch.prefix(self.branch.len().saturating_sub(2))
    }

    /// The offending tile `D_{|D|-1}`.
    pub fn offender(&self) -> Tile {
        self.branch.last()
    }

    /// The combined path `P_{0..k} D_{0..|D|-2}`.
    pub fn combined(&self, p: &Path) -> Path {
        let mut tiles = p.tiles()[..=self.k].to_vec();
        tiles.extend_from_slice(self.body().tiles());
        Path::new_unchecked(tiles)
    }
}

/// Which leaf of the decision procedure produced the outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionLeaf {
    /// The pumped tail never meets anything: the pumping is infinite.
    TailUnbounded,
    /// The pumped tail reaches the height line; one period earlier it is
    /// outside the zone.
    TailReachesHeight,
    /// The finite pumped tail leaves the zone before being stopped.
    TailExitsZone,
    /// No preferred-side h-successful branch exists off the pumping; the
    /// pumped tail itself is the enclosing branch at `j`.
    NoPreferredBranch,
    /// The back-translated preferred branch grows in full, escaping the zone.
    ShiftedBranchEscapes,
    /// The back-translated branch is cut off and nothing restarts from it;
    /// the cut branch is the enclosing branch at `i`.
    ShiftedBranchBlocked,
    /// A restarted branch, translated forward, escapes the zone.
    RestartEscapes,
    /// The forward-translated restart is cut off; it is the enclosing branch
    /// at `j`.
    RestartBlocked,
}

/// Outcome of the decision procedure.
#[derive(Debug, Clone)]
pub enum PumpOrEnclose {
    /// A producible path whose last tile lies outside the zone.
    EscapesZone(Path),
    Encloses(EnclosingBranch),
}

/// Outcome plus the provenance needed by verification and reporting.
#[derive(Debug, Clone)]
pub struct DecisionReport {
    pub outcome: PumpOrEnclose,
    pub leaf: DecisionLeaf,
    pub i: usize,
    pub j: usize,
    pub chirality: Chirality,
    /// Midpoint of the path's visible glue on the line.
    pub line_glue_mid: QPoint,
    /// Index of that glue on the path.
    pub line_glue_index: usize,
}

struct Ctx<'a> {
    tas: &'a Tas,
    cfg: &'a BlockConfig,
    p: &'a Path,
    i: usize,
    j: usize,
    v: Vec2,
    chirality: Chirality,
    line_mid: QPoint,
    line_idx: usize,
}

impl Ctx<'_> {
    fn report(&self, leaf: DecisionLeaf, outcome: PumpOrEnclose) -> DecisionReport {
        DecisionReport {
            outcome,
            leaf,
            i: self.i,
            j: self.j,
            chirality: self.chirality,
            line_glue_mid: self.line_mid,
            line_glue_index: self.line_idx,
        }
    }

    fn glue_mid(&self, a: Point, b: Point) -> QPoint {
        QPoint::new((a.x as i64 + b.x as i64) * 2, (a.y as i64 + b.y as i64) * 2)
    }

    /// Checks every enclosing-branch invariant before the result is surfaced.
    fn validated(&self, leaf: DecisionLeaf, eb: EnclosingBranch) -> Result<DecisionReport, BlockError> {
        let p = self.p;
        let k = eb.k;
        let d0 = eb.branch.first();
        if d0.pos != p.tile(k + 1).pos {
            return Err(BlockError::InvariantViolation(format!(
                "branch must start at the position of tile {}",
                k + 1
            )));
        }
        let dir = Dir::from_step(d0.pos - p.tile(k).pos).unwrap();
        let along = self.tas.tile(p.tile(k).ty).glue(dir).label.clone();
        let original = p.glue_at(k, self.tas).label;
        if along.as_deref() != Some(original.as_str()) {
            return Err(BlockError::InvariantViolation(
                "branch glue label differs from the path's glue".into(),
            ));
        }
        let combined = eb.combined(p);
        if !crate::path::is_producible_path(self.tas, &combined) {
            return Err(BlockError::InvariantViolation("combined branch path is not producible".into()));
        }
        if combined.positions().any(|pos| pos.y >= self.cfg.h) {
            return Err(BlockError::InvariantViolation("branch reaches the height line".into()));
        }
        if !edge_glue_visible(self.tas, &combined, p.tile(k).pos, d0.pos) {
            return Err(BlockError::InvariantViolation(
                "branch glue is not visible relative to the combined path".into(),
            ));
        }
        match visible_glue_on_line(self.tas, &combined, self.cfg.line) {
            Some(vg) if vg.glue.midpoint() == self.line_mid => {}
            _ => {
                return Err(BlockError::InvariantViolation(
                    "combined path changes the visible glue on the line".into(),
                ))
            }
        }
        let off = eb.offender();
        match eb.kind {
            BranchKind::HitsPrefix => {
                let in_prefix = self.tas.seed().contains(off.pos)
                    || p.tiles()[..=k].iter().any(|t| t.pos == off.pos);
                if !in_prefix {
                    return Err(BlockError::InvariantViolation(
                        "offender does not intersect the seed or the kept prefix".into(),
                    ));
                }
            }
            BranchKind::BelowLine => {
                let mid = self.glue_mid(eb.body().last().pos, off.pos);
                if mid.qx != self.cfg.line.qx() || mid.qy >= self.line_mid.qy {
                    return Err(BlockError::InvariantViolation(
                        "offender glue is not on the line strictly below the path's crossings".into(),
                    ));
                }
            }
        }
        Ok(self.report(leaf, PumpOrEnclose::Encloses(eb)))
    }
}

/// Implements the decision procedure for one h-successful path. Returns an
/// escape witness (a producible path leaving the zone) or an enclosing branch
/// satisfying the branch invariants.
pub fn pump_or_enclose(tas: &Tas, p: &Path, cfg: &BlockConfig) -> Result<DecisionReport, BlockError> {
    if !is_h_successful(tas, p, cfg) {
        return Err(BlockError::NotHSuccessful);
    }
    let on_line = visible_glue_on_line(tas, p, cfg.line).ok_or(BlockError::NoLineGlue)?;
    let chirality = match on_line.orientation {
        Orientation::Plus => Chirality::Right,
        Orientation::Minus => Chirality::Left,
        Orientation::Vertical => unreachable!("half-integer lines meet horizontal steps only"),
    };
    let (i, j) = visibility_setup(tas, p, &cfg.setup()).ok_or(BlockError::SetupUnavailable)?;
    let line_idx = on_line.glue.index;
    if line_idx >= i {
        return Err(BlockError::ConfigTooSmall(
            "the path's line glue does not precede the pumping pair".into(),
        ));
    }
    let ctx = Ctx {
        tas,
        cfg,
        p,
        i,
        j,
        v: p.tile(j).pos - p.tile(i).pos,
        chirality,
        line_mid: on_line.glue.midpoint(),
        line_idx,
    };

    // grow the pumped tail
    let spec = PumpSpec::new(i, j);
    let period = j - i;
    let (mut min, mut max) = tas.seed().bounding_box();
    for t in &p.tiles()[..=j] {
        min.x = min.x.min(t.pos.x);
        min.y = min.y.min(t.pos.y);
        max.x = max.x.max(t.pos.x);
        max.y = max.y.max(t.pos.y);
    }
    let span = (max.x - min.x + max.y - min.y) as usize + 4;
    let horizon = j + (span / ctx.v.linf().max(1) as usize + 4) * period;

    let mut used: BTreeSet<Point> = p.positions().take(j + 1).collect();
    let mut tail: Vec<Tile> = Vec::new();
    let mut offender: Option<Tile> = None;
    let mut reached_h: Option<usize> = None;
    let mut first_exit: Option<usize> = None;
    for k in j + 1..=horizon {
        let t = pumping_tile(p, spec, k);
        if tas.seed().contains(t.pos) || used.contains(&t.pos) {
            offender = Some(t);
            break;
        }
        if t.pos.y == cfg.h && reached_h.is_none() {
            reached_h = Some(k);
        }
        if !cfg.zone.contains(t.pos) && first_exit.is_none() {
            first_exit = Some(k);
        }
        used.insert(t.pos);
        tail.push(t);
    }

    let tail_path = |upto_full_index: usize| -> Path {
        let mut tiles = p.tiles()[..=j].to_vec();
        tiles.extend_from_slice(&tail[..=upto_full_index - (j + 1)]);
        Path::new_unchecked(tiles)
    };

    let Some(offender) = offender else {
        // infinite pumping; walk the closed form until it leaves the zone
        let mut k = j + 1;
        loop {
            let t = pumping_tile(p, spec, k);
            if !cfg.zone.contains(t.pos) {
                break;
            }
            k += 1;
            assert!(
                k <= horizon + 4 * (cfg.zone.len() / ctx.v.linf().max(1) as usize + 2) * period,
                "an unbounded pumping must leave the finite zone"
            );
        }
        let mut tiles = p.tiles()[..=j].to_vec();
        tiles.extend((j + 1..=k).map(|k| pumping_tile(p, spec, k)));
        let witness = Path::new_unchecked(tiles);
        return Ok(ctx.report(DecisionLeaf::TailUnbounded, PumpOrEnclose::EscapesZone(witness)));
    };

    if let Some(s) = reached_h {
        let back = pumping_tile(p, spec, s).pos + (-ctx.v);
        if cfg.zone.contains(back) {
            return Err(BlockError::ConfigTooSmall(
                "pumped tail reaches the height line with its back-translate inside the zone".into(),
            ));
        }
        return Ok(ctx.report(DecisionLeaf::TailReachesHeight, PumpOrEnclose::EscapesZone(tail_path(s))));
    }
    if let Some(e) = first_exit {
        return Ok(ctx.report(DecisionLeaf::TailExitsZone, PumpOrEnclose::EscapesZone(tail_path(e))));
    }

    // finite tail below the height line, inside the zone; the offender must
    // meet the seed or the kept prefix
    let prefix_hit = tas.seed().contains(offender.pos)
        || p.tiles()[..=j].iter().any(|t| t.pos == offender.pos);
    if !prefix_hit {
        return Err(BlockError::InvariantViolation(
            "pumped tail stopped on its own periodic part".into(),
        ));
    }
    let glue_jj = ctx.glue_mid(p.tile(j).pos, p.tile(j + 1).pos);
    if tail
        .iter()
        .zip(std::iter::once(&p.tile(j)).chain(tail.iter()))
        .any(|(t, prev)| {
            let mid = ctx.glue_mid(prev.pos, t.pos);
            mid.qx == cfg.line.qx() && mid.qy < ctx.line_mid.qy
        })
    {
        return Err(BlockError::InvariantViolation(
            "pumped tail placed a glue on the line below the path's visible glue".into(),
        ));
    }

    // search for the most preferred-priority h-successful branch off the tail
    let mut stem: Vec<Tile> = p.tiles()[..=j].to_vec();
    stem.extend_from_slice(&tail);
    stem.push(offender);
    let search = BranchSearch {
        tas,
        cfg,
        chirality,
        stem: stem.clone(),
        dev_min: j + 2,
        floors: vec![(cfg.line.qx(), ctx.line_mid.qy), (glue_jj.qx, glue_jj.qy)],
        visible_edge: Some((p.tile(j).pos, p.tile(j + 1).pos)),
        line_glue: Some(ctx.line_mid),
    };
    let Some(found) = search.find_first() else {
        let mut branch = tail.clone();
        branch.push(offender);
        return ctx.validated(
            DecisionLeaf::NoPreferredBranch,
            EnclosingBranch { k: j, branch: Path::new_unchecked(branch), kind: BranchKind::HitsPrefix },
        );
    };
    ctx.shifted_phase(&stem, &found)
}

impl Ctx<'_> {
    /// Grows the back-translated branch from the kept prefix at `i`, then
    /// either reports an escape, returns the cut branch as the enclosure, or
    /// recurses into the restart phase.
    fn shifted_phase(&self, stem: &[Tile], found: &FoundBranch) -> Result<DecisionReport, BlockError> {
        let (tas, cfg, p) = (self.tas, self.cfg, self.p);
        let r = found.deviation - 1;
        let back = -self.v;
        // untranslated chain: tail elements j+1..=r, then the deviating suffix
        let mut chain: Vec<Tile> = stem[self.j + 1..=r].to_vec();
        chain.extend_from_slice(&found.path.tiles()[found.deviation..]);
        let q_part = r - self.j;
        let shifted: Vec<Tile> = chain.iter().map(|t| t.translated(back)).collect();

        let occupied: BTreeSet<Point> = tas
            .seed()
            .domain()
            .chain(p.positions().take(self.i + 1))
            .collect();
        let mut grown: Vec<Tile> = Vec::new();
        let mut stop: Option<(Tile, BranchKind)> = None;
        for (idx, w) in shifted.iter().enumerate() {
            let prev_pos = if idx == 0 { p.tile(self.i).pos } else { shifted[idx - 1].pos };
            let mid = self.glue_mid(prev_pos, w.pos);
            if mid.qx == cfg.line.qx() && mid.qy < self.line_mid.qy {
                if idx < q_part {
                    return Err(BlockError::InvariantViolation(
                        "translated pumping placed a glue on the line below the path's".into(),
                    ));
                }
                stop = Some((*w, BranchKind::BelowLine));
                break;
            }
            if occupied.contains(&w.pos) {
                if idx < q_part {
                    return Err(BlockError::InvariantViolation(
                        "translated pumping intersects the kept prefix".into(),
                    ));
                }
                stop = Some((*w, BranchKind::HitsPrefix));
                break;
            }
            if !cfg.zone.contains(w.pos) {
                let mut tiles = p.tiles()[..=self.i].to_vec();
                tiles.extend_from_slice(&shifted[..=idx]);
                let witness = Path::new_unchecked(tiles);
                return Ok(self.report(
                    DecisionLeaf::ShiftedBranchEscapes,
                    PumpOrEnclose::EscapesZone(witness),
                ));
            }
            debug_assert!(!grown.iter().any(|g| g.pos == w.pos), "translated branch self-intersects");
            grown.push(*w);
        }

        let Some((offender, kind)) = stop else {
            // the whole translated branch grew; its last tile is the
            // translated height-line tile and must be out of the zone, which
            // the loop above would have caught. Reaching here means the zone
            // still contains it.
            return Err(BlockError::ConfigTooSmall(
                "fully grown translated branch stays inside the zone".into(),
            ));
        };

        let mut branch_tiles = grown.clone();
        branch_tiles.push(offender);
        let branch = Path::new_unchecked(branch_tiles);

        // restart search off the cut branch
        let glue_ii = self.glue_mid(p.tile(self.i).pos, p.tile(self.i + 1).pos);
        let mut stem2: Vec<Tile> = p.tiles()[..=self.i].to_vec();
        stem2.extend_from_slice(branch.tiles());
        let search = BranchSearch {
            tas,
            cfg,
            chirality: self.chirality,
            stem: stem2,
            dev_min: self.i + 2,
            floors: vec![(cfg.line.qx(), self.line_mid.qy), (glue_ii.qx, glue_ii.qy)],
            visible_edge: Some((p.tile(self.i).pos, p.tile(self.i + 1).pos)),
            line_glue: Some(self.line_mid),
        };
        let Some(restart) = search.find_first() else {
            return self.validated(
                DecisionLeaf::ShiftedBranchBlocked,
                EnclosingBranch { k: self.i, branch, kind },
            );
        };
        self.restart_phase(&grown, &restart)
    }

    /// Translates the restarted branch forward and grows it after the kept
    /// prefix at `j`.
    fn restart_phase(&self, shifted_body: &[Tile], restart: &FoundBranch) -> Result<DecisionReport, BlockError> {
        let (tas, cfg, p) = (self.tas, self.cfg, self.p);
        // restart.path = P_{0..i} X S with X a nonempty prefix of the shifted
        // body; forward-translating X recovers original pumping/branch tiles
        let x_len = restart.deviation - (self.i + 1);
        debug_assert!(x_len >= 1 && x_len <= shifted_body.len());
        let x_fwd: Vec<Tile> = shifted_body[..x_len].iter().map(|t| t.translated(self.v)).collect();
        let s_fwd: Vec<Tile> = restart.path.tiles()[restart.deviation..]
            .iter()
            .map(|t| t.translated(self.v))
            .collect();

        let mut occupied: BTreeSet<Point> = tas
            .seed()
            .domain()
            .chain(p.positions().take(self.j + 1))
            .collect();
        for t in &x_fwd {
            debug_assert!(!occupied.contains(&t.pos), "forward-translated prefix must regrow");
            occupied.insert(t.pos);
        }

        let mut grown_s: Vec<Tile> = Vec::new();
        let mut stop: Option<(Tile, BranchKind)> = None;
        for (idx, w) in s_fwd.iter().enumerate() {
            let prev_pos = if idx == 0 { x_fwd.last().unwrap().pos } else { s_fwd[idx - 1].pos };
            let mid = self.glue_mid(prev_pos, w.pos);
            if mid.qx == cfg.line.qx() && mid.qy < self.line_mid.qy {
                stop = Some((*w, BranchKind::BelowLine));
                break;
            }
            if occupied.contains(&w.pos) {
                stop = Some((*w, BranchKind::HitsPrefix));
                break;
            }
            if !cfg.zone.contains(w.pos) {
                let mut tiles = p.tiles()[..=self.j].to_vec();
                tiles.extend_from_slice(&x_fwd);
                tiles.extend_from_slice(&s_fwd[..=idx]);
                let witness = Path::new_unchecked(tiles);
                return Ok(self.report(DecisionLeaf::RestartEscapes, PumpOrEnclose::EscapesZone(witness)));
            }
            occupied.insert(w.pos);
            grown_s.push(*w);
        }

        let Some((offender, kind)) = stop else {
            return Err(BlockError::ConfigTooSmall(
                "fully grown restarted branch stays inside the zone".into(),
            ));
        };
        let mut branch_tiles = x_fwd;
        branch_tiles.extend_from_slice(&grown_s);
        branch_tiles.push(offender);
        self.validated(
            DecisionLeaf::RestartBlocked,
            EnclosingBranch { k: self.j, branch: Path::new_unchecked(branch_tiles), kind },
        )
    }
}

/// Verifies an enclosing branch blocks its path: the direct check scans for a
/// position where the branch assembly and the path place different tile
/// types; the geometric cross-check closes a curve around the enclosed pocket
/// and confirms the branching glue's enclosed side is the bounded component.
/// The two checks must agree, otherwise the run aborts with a diagnostic.
pub fn verify_enclosure(
    tas: &Tas,
    p: &Path,
    eb: &EnclosingBranch,
    cfg: &BlockConfig,
) -> Result<bool, BlockError> {
    let body = eb.body();
    let direct = p.tiles().iter().any(|t| {
        body.tiles()
            .iter()
            .any(|b| b.pos == t.pos && b.ty != t.ty)
    });
    let geometric = enclosure_geometry_holds(tas, p, eb, cfg)?;
    if direct != geometric {
        return Err(BlockError::CrossCheckMismatch(format!(
            "direct conflict scan says {direct}, geometry says {geometric}"
        )));
    }
    Ok(direct)
}

/// Builds the closing curve for the branch and checks the pocket: the point a
/// quarter unit on the enclosed side of the branching glue must lie inside.
fn enclosure_geometry_holds(
    tas: &Tas,
    p: &Path,
    eb: &EnclosingBranch,
    cfg: &BlockConfig,
) -> Result<bool, BlockError> {
    let k = eb.k;
    let body = eb.body();
    let off = eb.offender();
    let on_line = match visible_glue_on_line(tas, p, cfg.line) {
        Some(v) => v,
        None => return Ok(false),
    };
    let curve = match eb.kind {
        BranchKind::HitsPrefix => {
            // walk through the prefix assembly from the offender back to P_k
            let mut cells: BTreeSet<Point> = tas.seed().domain().collect();
            cells.extend(p.positions().take(k + 1));
            if !cells.contains(&off.pos) {
                return Ok(false);
            }
            let back = grid_path(&cells, off.pos, p.tile(k).pos);
            let Some(back) = back else { return Ok(false) };
            let through = PolyCurve::new(back.iter().map(|pt| QPoint::from_cell(*pt)).collect());
            let Ok(through) = through else { return Ok(false) };
            let step = PolyCurve::segment(QPoint::from_cell(p.tile(k).pos), QPoint::from_cell(body.first().pos))
                .expect("adjacent cells");
            let along = canonical_embedding(&full_branch(&body, off));
            match concat(&[through, step, along]) {
                Ok(c) => c,
                Err(_) => return Ok(false),
            }
        }
        BranchKind::BelowLine => {
            let l_idx = on_line.glue.index;
            if l_idx + 1 > k {
                return Ok(false);
            }
            let l_mid = on_line.glue.midpoint();
            let d_mid = QPoint::new(
                (body.last().pos.x as i64 + off.pos.x as i64) * 2,
                (body.last().pos.y as i64 + off.pos.y as i64) * 2,
            );
            let start = PolyCurve::segment(l_mid, QPoint::from_cell(p.tile(l_idx + 1).pos)).unwrap();
            let mut walk_tiles = p.tiles()[l_idx + 1..=k].to_vec();
            walk_tiles.extend_from_slice(body.tiles());
            let walk = canonical_embedding(&Path::new_unchecked(walk_tiles));
            let tail = PolyCurve::segment(QPoint::from_cell(body.last().pos), d_mid).unwrap();
            let close = PolyCurve::segment(d_mid, l_mid).unwrap();
            match concat(&[start, walk, tail, close]) {
                Ok(c) => c,
                Err(_) => return Ok(false),
            }
        }
    };
    if !is_simple_closed(&curve) {
        return Ok(false);
    }
    // the enclosed side of the branching glue: left of travel for the
    // right-handed sense, right of travel for the left-handed one
    let d0 = body.first();
    let dir = Dir::from_step(d0.pos - p.tile(k).pos).unwrap();
    let side = match on_line.orientation {
        Orientation::Plus => dir.rotate_ccw(),
        _ => dir.rotate_cw(),
    };
    let mid = QPoint::new(
        (p.tile(k).pos.x as i64 + d0.pos.x as i64) * 2,
        (p.tile(k).pos.y as i64 + d0.pos.y as i64) * 2,
    );
    let probe = mid.offset(side.step().dx as i64, side.step().dy as i64);
    Ok(point_in_bounded_component(&curve, probe) == Location::Inside)
}

fn full_branch(body: &Path, off: Tile) -> Path {
    let mut tiles = body.tiles().to_vec();
    tiles.push(off);
    Path::new_unchecked(tiles)
}

/// Shortest simple walk between two occupied cells through occupied cells,
/// with deterministic tie-breaking.
fn grid_path(cells: &BTreeSet<Point>, from: Point, to: Point) -> Option<Vec<Point>> {
    use std::collections::{BTreeMap, VecDeque};
    let mut prev: BTreeMap<Point, Point> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = BTreeSet::from([from]);
    while let Some(cur) = queue.pop_front() {
        if cur == to {
            let mut out = vec![to];
            let mut c = to;
            while c != from {
                c = prev[&c];
                out.push(c);
            }
            out.reverse();
            return Some(out);
        }
        for d in Dir::ALL {
            let n = cur.neighbor(d);
            if cells.contains(&n) && seen.insert(n) {
                prev.insert(n, cur);
                queue.push_back(n);
            }
        }
    }
    None
}
