//! The halting-tile reduction gadget: transform a claimed bounded machine
//! simulator so accepting computations sprout an infinite north column east
//! of the halting tile, plus the rectangle-bound checker for such simulators.

use thiserror::Error;

use crate::model::{Assembly, Dir, Glue, Point, Tas, TileId, TileType};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("tile {0:?} is not in the tileset")]
    UnknownHaltTile(String),
    #[error("halt tile's east glue already binds the west glue of tile {0:?}")]
    EastGlueMatched(String),
    #[error("bound must satisfy b_m >= s_n ({0} < {1})")]
    BadBound(u64, u64),
}

/// Space/time bounds for the rectangle check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RectBound {
    /// The bounding function value `B(n)`.
    pub b_m: u64,
    /// Time bound `t(n)`.
    pub t_n: u64,
    /// Space bound `s(n)`.
    pub s_n: u64,
    /// Input length.
    pub n: u64,
    /// The special halting tile type.
    pub halt_tile: TileId,
}

impl RectBound {
    pub fn new(b_m: u64, t_n: u64, s_n: u64, n: u64, halt_tile: TileId) -> Result<RectBound, ReductionError> {
        if b_m < s_n {
            return Err(ReductionError::BadBound(b_m, s_n));
        }
        Ok(RectBound { b_m, t_n, s_n, n, halt_tile })
    }
}

/// Which structural premise the halt tile satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HaltGluePremise {
    StrengthZero,
    UnmatchedStrengthOne,
}

/// Replaces the halt tile's east glue with a fresh strength-1 glue and adds
/// two tile types: `t1` binds that glue with its west side, and `t2` stacks on
/// `t1`'s north side and on its own, so any placed halt tile sprouts an
/// infinite north column one cell to its east.
///
/// The premise that the halt tile's east glue is strength 0, or strength 1
/// matched by no west glue, is checked; a violation names the matching tile.
pub fn modify_tileset_for_reduction(
    tas: &Tas,
    halt: TileId,
) -> Result<(Tas, HaltGluePremise), ReductionError> {
    let types = tas.tile_types();
    if halt.0 >= types.len() {
        return Err(ReductionError::UnknownHaltTile(format!("#{}", halt.0)));
    }
    let east = &types[halt.0].east;
    let premise = match &east.label {
        None => HaltGluePremise::StrengthZero,
        Some(_) if east.strength == 0 => HaltGluePremise::StrengthZero,
        Some(label) => {
            for t in types {
                if t.west.label.as_deref() == Some(label.as_str()) && t.west.strength >= 1 {
                    return Err(ReductionError::EastGlueMatched(t.name.clone()));
                }
            }
            HaltGluePremise::UnmatchedStrengthOne
        }
    };

    let fresh = |base: &str| {
        let mut candidate = base.to_owned();
        let mut k = 0usize;
        let used: Vec<&str> = types
            .iter()
            .flat_map(|t| Dir::ALL.map(|d| t.glue(d).label.as_deref().unwrap_or("")))
            .collect();
        while used.contains(&candidate.as_str()) {
            k += 1;
            candidate = format!("{base}{k}");
        }
        candidate
    };
    let g_east = fresh("gE'");
    let g_up = fresh("gUp'");

    let mut new_types = types.to_vec();
    new_types[halt.0].east = Glue::new(&g_east);
    new_types.push(TileType::new("t1", Glue::new(&g_up), Glue::blank(), Glue::blank(), Glue::new(&g_east)));
    new_types.push(TileType::new("t2", Glue::new(&g_up), Glue::blank(), Glue::new(&g_up), Glue::blank()));

    let modified = Tas::new(new_types, tas.seed().clone(), 1).expect("modification preserves validity");
    Ok((modified, premise))
}

/// Verdict of the rectangle-bound check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RectVerdict {
    /// Everything in bounds and the halt tile appears on the rightmost
    /// column, nowhere else.
    OkAccept,
    /// Everything in bounds and the halt tile is absent.
    OkReject,
    Violation(String),
}

/// Checks the bounded-simulation clauses on a (possibly depth-truncated)
/// terminal assembly: seed inside the `B x B` square, domain inside the
/// `t*B x B` rectangle, nonempty intersection with the last column band, and
/// halt-tile placement.
pub fn check_rect_conditions(tas: &Tas, asm: &Assembly, rb: &RectBound) -> RectVerdict {
    let b = rb.b_m as i64;
    let t = rb.t_n as i64;
    for p in tas.seed().domain() {
        if p.x < 0 || p.y < 0 || p.x as i64 >= b || p.y as i64 >= b {
            return RectVerdict::Violation(format!("seed tile at {p} outside the {b}x{b} square"));
        }
    }
    let width = t * b;
    for p in asm.domain() {
        if p.x < 0 || p.y < 0 || (p.x as i64) >= width || (p.y as i64) >= b {
            return RectVerdict::Violation(format!("tile at {p} outside the {width}x{b} rectangle"));
        }
    }
    let band_lo = b * (t - 1) + 1;
    let band_hi = b * (t - 1) + b - 1;
    let touches_band = asm
        .domain()
        .any(|p| (p.x as i64) >= band_lo && (p.x as i64) <= band_hi && (p.y as i64) < b);
    if !touches_band {
        return RectVerdict::Violation(format!(
            "domain misses the last column band x in [{band_lo},{band_hi}]"
        ));
    }
    let rightmost = asm.domain().map(|p| p.x).max().unwrap();
    let halts: Vec<Point> = asm
        .tiles()
        .filter(|t| t.ty == rb.halt_tile)
        .map(|t| t.pos)
        .collect();
    if halts.is_empty() {
        return RectVerdict::OkReject;
    }
    if let Some(p) = halts.iter().find(|p| p.x != rightmost) {
        return RectVerdict::Violation(format!(
            "halt tile at {p} is off the rightmost column x={rightmost}"
        ));
    }
    RectVerdict::OkAccept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::TileId;

    /// A mock bounded simulator: a row of tiles ending in the halt tile H.
    fn mock_simulator() -> (Tas, TileId) {
        let s = TileType::new("s", Glue::blank(), Glue::new("r0"), Glue::blank(), Glue::blank());
        let w = TileType::new("w", Glue::blank(), Glue::new("r1"), Glue::blank(), Glue::new("r0"));
        let h = TileType::new("H", Glue::blank(), Glue::new("halt-out"), Glue::blank(), Glue::new("r1"));
        let seed = Assembly::single(Point::new(0, 0), TileId(0));
        (Tas::new(vec![s, w, h], seed, 1).unwrap(), TileId(2))
    }

    #[test]
    fn modification_sprouts_a_column_east_of_h() {
        let (tas, h) = mock_simulator();
        let (modified, premise) = modify_tileset_for_reduction(&tas, h).unwrap();
        assert_eq!(premise, HaltGluePremise::UnmatchedStrengthOne);
        assert_eq!(modified.tile_count(), tas.tile_count() + 2);
        let asm = modified.grow(modified.seed(), 50, 0).final_assembly();
        // row s w H then t1 at (3,0) and t2 column above it
        assert!(asm.contains(Point::new(3, 0)));
        assert!(asm.contains(Point::new(3, 5)));
        let t1 = modified.tile_id_by_name("t1").unwrap();
        let t2 = modified.tile_id_by_name("t2").unwrap();
        assert_eq!(asm.get(Point::new(3, 0)), Some(t1));
        assert_eq!(asm.get(Point::new(3, 1)), Some(t2));
    }

    #[test]
    fn matched_east_glue_is_rejected_with_the_matching_tile() {
        let s = TileType::new("s", Glue::blank(), Glue::new("r0"), Glue::blank(), Glue::blank());
        let h = TileType::new("H", Glue::blank(), Glue::new("x"), Glue::blank(), Glue::new("r0"));
        let eat = TileType::new("eater", Glue::blank(), Glue::blank(), Glue::blank(), Glue::new("x"));
        let tas = Tas::new(vec![s, h, eat], Assembly::single(Point::new(0, 0), TileId(0)), 1).unwrap();
        let err = modify_tileset_for_reduction(&tas, TileId(1)).unwrap_err();
        assert_eq!(err, ReductionError::EastGlueMatched("eater".into()));
    }

    #[test]
    fn unknown_halt_tile_is_rejected() {
        let (tas, _) = mock_simulator();
        assert!(matches!(
            modify_tileset_for_reduction(&tas, TileId(99)),
            Err(ReductionError::UnknownHaltTile(_))
        ));
    }

    #[test]
    fn rect_check_accepts_the_mock_and_spots_violations() {
        let (tas, h) = mock_simulator();
        let asm = tas.grow(tas.seed(), 10, 0).final_assembly();
        // 3 tiles wide: B=3, t=1 puts the band at x in [1,2]
        let rb = RectBound::new(3, 1, 1, 1, h).unwrap();
        assert_eq!(check_rect_conditions(&tas, &asm, &rb), RectVerdict::OkAccept);
        // halt off the rightmost column: add a decoy H at (0,1) via a fake map
        let mut bad = asm.placements().clone();
        bad.insert(Point::new(0, 1), h);
        let bad = Assembly::new(bad).unwrap();
        assert!(matches!(check_rect_conditions(&tas, &bad, &rb), RectVerdict::Violation(_)));
        // domain exceeding the rectangle
        let rb_small = RectBound::new(2, 1, 1, 1, h).unwrap();
        assert!(matches!(check_rect_conditions(&tas, &asm, &rb_small), RectVerdict::Violation(_)));
        // reject verdict when H never appears
        let seedonly = tas.seed().clone();
        let rb_seed = RectBound::new(3, 1, 1, 1, h).unwrap();
        assert!(matches!(check_rect_conditions(&tas, &seedonly, &rb_seed), RectVerdict::Violation(_) | RectVerdict::OkReject));
    }

    #[test]
    fn bad_bound_rejected() {
        assert_eq!(RectBound::new(1, 1, 5, 1, TileId(0)).unwrap_err(), ReductionError::BadBound(1, 5));
    }
}
