//! The total order in which h-successful paths are blocked.

use std::cmp::Ordering;

use crate::model::Tas;
use crate::path::{left_priority, right_priority, Path, PathError, Winner};
use crate::visibility::{visible_glue_on_line, Orientation};

use super::{BlockConfig, BlockError};

/// Compares two h-successful paths in blocking order:
///
/// - a strictly higher visible glue on the line comes first;
/// - at the same glue position, plus-oriented before minus-oriented;
/// - both plus: the path whose suffix from the glue is *less* right-priority
///   comes first (symmetrically with left-priority for minus);
/// - equal suffixes: the right-priority path of the two reversed paths comes
///   first, which anchors the comparison at the last shared consecutive pair;
///   if even that is ambiguous, the lexicographically smaller canonical
///   encoding wins.
pub fn path_order_cmp(tas: &Tas, p: &Path, q: &Path, cfg: &BlockConfig) -> Result<Ordering, BlockError> {
    if p == q {
        return Ok(Ordering::Equal);
    }
    let vp = visible_glue_on_line(tas, p, cfg.line).ok_or(BlockError::NoLineGlue)?;
    let vq = visible_glue_on_line(tas, q, cfg.line).ok_or(BlockError::NoLineGlue)?;
    let (mp, mq) = (vp.glue.midpoint(), vq.glue.midpoint());
    if mp.qy != mq.qy {
        // higher glue first
        return Ok(mq.qy.cmp(&mp.qy));
    }
    debug_assert_eq!(mp, mq, "equal heights on one vertical line share the midpoint");
    match (vp.orientation, vq.orientation) {
        (Orientation::Plus, Orientation::Minus) => return Ok(Ordering::Less),
        (Orientation::Minus, Orientation::Plus) => return Ok(Ordering::Greater),
        _ => {}
    }
    let sp = p.suffix(vp.glue.index);
    let sq = q.suffix(vq.glue.index);
    if sp != sq {
        let winner = match vp.orientation {
            Orientation::Plus => right_priority(&sp, &sq),
            Orientation::Minus => left_priority(&sp, &sq),
            Orientation::Vertical => unreachable!(),
        };
        match winner {
            // the *other* path's suffix being priority puts this one first
            Ok(Winner::Second) => return Ok(Ordering::Less),
            Ok(Winner::First) => return Ok(Ordering::Greater),
            Err(PathError::PrefixAmbiguity) => return Ok(fallback_cmp(p, q)),
            Err(e) => return Err(BlockError::Path(e)),
        }
    }
    Ok(fallback_cmp(p, q))
}

/// Shared-suffix tie-break: right-priority of the reversed paths (anchored at
/// the divergence behind the shared suffix), then canonical encoding.
fn fallback_cmp(p: &Path, q: &Path) -> Ordering {
    match right_priority(&p.reversed(), &q.reversed()) {
        Ok(Winner::First) => Ordering::Less,
        Ok(Winner::Second) => Ordering::Greater,
        Err(_) => p.tiles().cmp(q.tiles()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocking::Zone;
    use crate::model::{Assembly, Glue, Point, Tas, Tile, TileId, TileType};
    use crate::visibility::VLine;

    fn free_tas() -> Tas {
        let s = TileType::new("s", Glue::new("u"), Glue::new("u"), Glue::new("u"), Glue::new("u"));
        let t = TileType::new("t", Glue::new("u"), Glue::new("u"), Glue::new("u"), Glue::new("u"));
        Tas::new(vec![s, t], Assembly::single(Point::new(-5, -5), TileId(0)), 1).unwrap()
    }

    fn cfg() -> BlockConfig {
        BlockConfig {
            h: 10,
            zone: Zone::rect(-10, -10, 20, 20),
            line: VLine::east_of_column(2),
            m: 1,
            min_sep: 1,
            max_vsep: 3,
        }
    }

    fn path_of(points: &[(i32, i32)]) -> Path {
        Path::new_unchecked(points.iter().map(|&(x, y)| Tile::new(Point::new(x, y), TileId(1))).collect())
    }

    #[test]
    fn higher_line_glue_comes_first() {
        let tas = free_tas();
        // both cross x=2.5 eastward, at heights 5 and 3
        let p = path_of(&[(2, 5), (3, 5), (3, 6)]);
        let q = path_of(&[(2, 3), (3, 3), (3, 4)]);
        assert_eq!(path_order_cmp(&tas, &p, &q, &cfg()).unwrap(), Ordering::Less);
        assert_eq!(path_order_cmp(&tas, &q, &p, &cfg()).unwrap(), Ordering::Greater);
    }

    #[test]
    fn plus_before_minus_at_the_same_position() {
        let tas = free_tas();
        let p = path_of(&[(2, 4), (3, 4), (3, 5)]); // eastward crossing
        let q = path_of(&[(3, 4), (2, 4), (2, 5)]); // westward crossing, same edge
        assert_eq!(path_order_cmp(&tas, &p, &q, &cfg()).unwrap(), Ordering::Less);
        assert_eq!(path_order_cmp(&tas, &q, &p, &cfg()).unwrap(), Ordering::Greater);
    }

    #[test]
    fn plus_pair_orders_by_suffix_priority_least_first() {
        let tas = free_tas();
        // shared crossing at (2,0)->(3,0); p's suffix turns north (less
        // right-priority), q's turns south
        let p = path_of(&[(2, 0), (3, 0), (3, 1), (4, 1)]);
        let q = path_of(&[(2, 0), (3, 0), (3, -1), (4, -1)]);
        assert_eq!(path_order_cmp(&tas, &p, &q, &cfg()).unwrap(), Ordering::Less);
        assert_eq!(path_order_cmp(&tas, &q, &p, &cfg()).unwrap(), Ordering::Greater);
    }

    #[test]
    fn equal_suffixes_fall_back_to_reversed_priority() {
        let tas = free_tas();
        // identical from the line crossing on; prefixes differ approaching it
        let p = path_of(&[(1, 0), (2, 0), (3, 0), (3, 1)]);
        let q = path_of(&[(1, 1), (2, 1), (2, 0), (3, 0), (3, 1)]);
        let a = path_order_cmp(&tas, &p, &q, &cfg()).unwrap();
        let b = path_order_cmp(&tas, &q, &p, &cfg()).unwrap();
        assert_eq!(a, b.reverse());
        assert_ne!(a, Ordering::Equal);
    }

    #[test]
    fn order_is_a_strict_total_order_on_samples() {
        let tas = free_tas();
        let c = cfg();
        let paths = vec![
            path_of(&[(2, 5), (3, 5), (3, 6)]),
            path_of(&[(2, 3), (3, 3), (3, 4)]),
            path_of(&[(3, 3), (2, 3), (2, 4)]),
            path_of(&[(2, 0), (3, 0), (3, 1), (4, 1)]),
            path_of(&[(2, 0), (3, 0), (3, -1), (4, -1)]),
            path_of(&[(1, 0), (2, 0), (3, 0), (3, 1), (4, 1)]),
        ];
        for a in &paths {
            for b in &paths {
                let ab = path_order_cmp(&tas, a, b, &c).unwrap();
                let ba = path_order_cmp(&tas, b, a, &c).unwrap();
                assert_eq!(ab, ba.reverse());
                if a != b {
                    assert_ne!(ab, Ordering::Equal);
                }
                for x in &paths {
                    let bx = path_order_cmp(&tas, b, x, &c).unwrap();
                    let ax = path_order_cmp(&tas, a, x, &c).unwrap();
                    if ab == Ordering::Less && bx == Ordering::Less {
                        assert_eq!(ax, Ordering::Less);
                    }
                }
            }
        }
    }
}
