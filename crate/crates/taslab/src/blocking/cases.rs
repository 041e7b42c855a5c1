//! Post-hoc classification of how each blocked path's branch interacted with
//! the blocker assembly, mirroring the three inductive cases of the all-paths
//! construction: for every path whose branch was cut short by an earlier
//! branch, a strictly earlier (in path order) h-successful witness is spliced
//! together and checked, and for same-sign interactions the separating curve
//! built from a nano-embedding is validated geometrically.

use std::cmp::Ordering;

use crate::geom::{canonical_embedding, concat, is_simple_closed, nano_embedding, PolyCurve, QPoint};
use crate::model::{Tas, Tile};
use crate::path::Path;
use crate::visibility::visible_glue_on_line;

use super::{path_order_cmp, BlockConfig, BlockError, BlockerState};

/// Which inductive case a cut-short branch falls into, by how the path's and
/// the cutting branch's visible glues sit on the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockCase {
    /// Shared glue position, opposite orientations.
    OppositeSigns,
    /// Different glue positions (or the cutting branch misses the line).
    DifferentPositions,
    /// Shared glue position, same orientation.
    SameSign,
}

/// Report for one blocked path.
#[derive(Debug, Clone)]
pub struct CaseReport {
    pub order_index: usize,
    /// The path conflicts with the blocker assembly (the construction's
    /// guarantee; checked directly).
    pub conflicts: bool,
    /// Set when the path's own branch was cut short by an earlier branch.
    pub case: Option<BlockCase>,
    /// Index of the record whose branch cut this one short.
    pub cut_by: Option<usize>,
    /// Whether the spliced witness path is h-successful and strictly earlier
    /// in path order. `None` when no splice point exists.
    pub witness_earlier: Option<bool>,
    /// For same-sign cases: whether the nano-embedding curve closing the
    /// pocket is simple and closed. `None` when not applicable.
    pub curve_simple: Option<bool>,
}

/// Classifies every blocked path of a finished blocker run.
pub fn classify_residuals(
    tas: &Tas,
    cfg: &BlockConfig,
    state: &BlockerState,
) -> Result<Vec<CaseReport>, BlockError> {
    let mut reports = Vec::new();
    for (n, rec) in state.records.iter().enumerate() {
        let p = &rec.path;
        let conflicts = p
            .tiles()
            .iter()
            .any(|t| state.alpha.get(t.pos).is_some_and(|ty| ty != t.ty));

        // E = P_{0..k} D_{0..|D|-2}; if the grown prefix is strict, find who
        // owns the tile it stopped at
        let eb = match &rec.report.outcome {
            super::PumpOrEnclose::Encloses(eb) => eb,
            super::PumpOrEnclose::EscapesZone(_) => unreachable!("escapes short-circuit the blocker"),
        };
        let mut e_tiles: Vec<Tile> = p.tiles()[..=eb.k].to_vec();
        e_tiles.extend_from_slice(&eb.body().tiles());
        let cut_by = if rec.grown.len() < e_tiles.len() {
            state.owner.get(&e_tiles[rec.grown.len()].pos).copied().filter(|&k| k < n)
        } else {
            None
        };

        let (case, witness_earlier, curve_simple) = match cut_by {
            None => (None, None, None),
            Some(krec) => {
                let cutter = &state.records[krec].grown;
                let case = classify_pair(tas, cfg, p, cutter);
                let witness = splice_witness(tas, cfg, p, cutter, n, state);
                let curve = if case == BlockCase::SameSign {
                    Some(case_curve_is_simple(tas, cfg, p, &rec.grown, cutter))
                } else {
                    None
                };
                (Some(case), witness, curve)
            }
        };
        reports.push(CaseReport { order_index: n, conflicts, case, cut_by, witness_earlier, curve_simple });
    }
    Ok(reports)
}

fn classify_pair(tas: &Tas, cfg: &BlockConfig, p: &Path, cutter: &Path) -> BlockCase {
    let vp = visible_glue_on_line(tas, p, cfg.line);
    let vf = if cutter.len() >= 2 { visible_glue_on_line(tas, cutter, cfg.line) } else { None };
    match (vp, vf) {
        (Some(a), Some(b)) if a.glue.midpoint() == b.glue.midpoint() => {
            if a.orientation == b.orientation {
                BlockCase::SameSign
            } else {
                BlockCase::OppositeSigns
            }
        }
        _ => BlockCase::DifferentPositions,
    }
}

/// Splices the cutter's prefix onto the path's suffix at their last shared
/// tile, and checks the witness is h-successful and strictly earlier.
fn splice_witness(
    tas: &Tas,
    cfg: &BlockConfig,
    p: &Path,
    cutter: &Path,
    n: usize,
    state: &BlockerState,
) -> Option<bool> {
    // last index of p that agrees with some cutter tile
    let mut best: Option<(usize, usize)> = None;
    for (bi, t) in p.tiles().iter().enumerate() {
        if let Some(ai) = cutter.tiles().iter().position(|c| c == t) {
            best = Some((bi, ai));
        }
    }
    let (b, a) = best?;
    if b + 1 >= p.len() {
        return Some(false);
    }
    let mut tiles = cutter.tiles()[..=a].to_vec();
    tiles.extend_from_slice(&p.tiles()[b + 1..]);
    let witness = Path::new_positional(tiles).ok()?;
    if !super::is_h_successful(tas, &witness, cfg) {
        return Some(false);
    }
    let earlier = path_order_cmp(tas, &witness, p, cfg).ok()? == Ordering::Less;
    // an earlier h-successful witness must itself conflict with the blocker
    let consistent = !earlier
        || witness
            .tiles()
            .iter()
            .any(|t| state.alpha.get(t.pos).is_some_and(|ty| ty != t.ty))
        || state.records[..n].iter().any(|r| r.path == witness);
    Some(earlier && consistent)
}

/// Builds the same-sign separating curve: the nano-embedding of the path's
/// branch segment from its line glue to just before the collision, a short
/// link to the cutter, the cutter's embedding walked backwards to its line
/// glue, and a quarter-length closing segment.
fn case_curve_is_simple(tas: &Tas, cfg: &BlockConfig, p: &Path, own: &Path, cutter: &Path) -> bool {
    let Some(vp) = visible_glue_on_line(tas, p, cfg.line) else { return false };
    let pstart = vp.glue.index;
    if pstart >= own.len() {
        return false;
    }
    // first own-branch tile (after the line glue) that collides with a cutter
    // position
    let mut hit: Option<(usize, usize)> = None;
    'outer: for (bi, t) in own.tiles().iter().enumerate().skip(pstart + 1) {
        for (ci, c) in cutter.tiles().iter().enumerate() {
            if c.pos == t.pos {
                hit = Some((bi, ci));
                break 'outer;
            }
        }
    }
    // continue past the grown prefix: the collision may be the stopped tile
    let (b, d) = match hit {
        Some(x) => x,
        None => {
            let stopped = own.len();
            let Some(next) = p.tiles().get(stopped) else { return false };
            match cutter.tiles().iter().position(|c| c.pos == next.pos) {
                Some(ci) => (stopped, ci),
                None => return false,
            }
        }
    };
    let Some(vf) = visible_glue_on_line(tas, cutter, cfg.line) else { return false };
    let f = vf.glue.index;
    if d < f || b < pstart + 2 {
        return false;
    }
    let seg = Path::new_unchecked(own.tiles()[pstart..b].to_vec());
    if seg.len() < 2 {
        return false;
    }
    let nano = nano_embedding(&seg);
    let link = match PolyCurve::segment(nano.last(), QPoint::from_cell(cutter.tile(d).pos)) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let walk_back = canonical_embedding(&Path::new_unchecked(cutter.tiles()[f..=d].to_vec())).reversed();
    let close = match PolyCurve::segment(QPoint::from_cell(cutter.tile(f).pos), nano.first()) {
        Ok(s) => s,
        Err(_) => return false,
    };
    match concat(&[nano, link, walk_back, close]) {
        Ok(c) => is_simple_closed(&c),
        Err(_) => false,
    }
}
