//! m-block representation functions, clean mapping with fuzz, bounded
//! equivalence checks, the flipped-L family, and simulation zones.
//!
//! Production sets are infinite for the systems of interest, so every check
//! here explores assemblies up to a depth bound with canonical deduplication.
//! "Terminal" at a bound means terminal-or-frontier: assemblies that admit no
//! attachment, plus assemblies first reached at exactly the bound. Verdicts
//! carry the bound so a pass is always an explicitly bounded pass.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::model::{Assembly, Dir, Glue, Point, Tas, TileId, TileType};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimError {
    #[error("scale factor m must be >= 1")]
    BadScale,
    #[error("representation table is inconsistent: two comparable patterns map to different tiles")]
    InconsistentTable,
    #[error("block at {0:?} matches patterns mapping to different tiles")]
    AmbiguousBlock((i32, i32)),
    #[error("pattern has {0} cells, expected m*m = {1}")]
    BadPatternSize(usize, usize),
    #[error("exploration exceeded the cap of {0} distinct assemblies")]
    CapExceeded(usize),
}

/// Builds the flipped-L system: a single-tile seed at the origin, an arm of
/// length `n + 1` growing east, then an infinite column growing north at
/// `x = n + 1`. The tileset has `n + 3` tile types.
pub fn gen_tn(n: usize) -> Tas {
    assert!(n >= 1, "the family is defined for n >= 1");
    let mut types = Vec::with_capacity(n + 3);
    types.push(TileType::new("seed", Glue::blank(), Glue::new("g0"), Glue::blank(), Glue::blank()));
    for k in 1..=n {
        types.push(TileType::new(
            &format!("a{k}"),
            Glue::blank(),
            Glue::new(&format!("g{k}")),
            Glue::blank(),
            Glue::new(&format!("g{}", k - 1)),
        ));
    }
    types.push(TileType::new("turn", Glue::new("v"), Glue::blank(), Glue::blank(), Glue::new(&format!("g{n}"))));
    types.push(TileType::new("up", Glue::new("v"), Glue::blank(), Glue::new("v"), Glue::blank()));
    let seed = Assembly::single(Point::new(0, 0), TileId(0));
    Tas::new(types, seed, 1).expect("the flipped-L system is well formed")
}

/// An m-block pattern: the contents of an m x m supertile, row-major from the
/// south-west corner, `None` for empty cells.
pub type BlockPattern = Vec<Option<TileId>>;

/// Is `a` a subpattern of `b`: defined cells of `a` agree with `b`.
fn pattern_subsumes(a: &BlockPattern, b: &BlockPattern) -> bool {
    a.iter().zip(b).all(|(x, y)| match x {
        None => true,
        Some(_) => x == y,
    })
}


/// A valid m-block supertile representation: a partial map from block
/// contents to target tile types, consistent under the subassembly order.
#[derive(Debug, Clone)]
pub struct BlockRepr {
    m: i32,
    table: Vec<(BlockPattern, TileId)>,
}

impl BlockRepr {
    pub fn new(m: i32, table: Vec<(BlockPattern, TileId)>) -> Result<BlockRepr, SimError> {
        if m < 1 {
            return Err(SimError::BadScale);
        }
        let want = (m * m) as usize;
        for (p, _) in &table {
            if p.len() != want {
                return Err(SimError::BadPatternSize(p.len(), want));
            }
        }
        for (i, (pa, ta)) in table.iter().enumerate() {
            for (pb, tb) in table.iter().skip(i + 1) {
                let comparable = pattern_subsumes(pa, pb) || pattern_subsumes(pb, pa);
                if comparable && ta != tb {
                    return Err(SimError::InconsistentTable);
                }
            }
        }
        Ok(BlockRepr { m, table })
    }

    /// The identity representation at scale 1 between equal-size tilesets:
    /// tile `i` of the source maps to tile `i` of the target.
    pub fn identity(tile_count: usize) -> BlockRepr {
        let table = (0..tile_count)
            .map(|i| (vec![Some(TileId(i))], TileId(i)))
            .collect();
        BlockRepr { m: 1, table }
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn table(&self) -> &[(BlockPattern, TileId)] {
        &self.table
    }

    /// Looks up a block's image. Exact matches win; otherwise a growing block
    /// inherits from any mapped subpattern, provided all applicable entries
    /// agree.
    pub fn map_block(&self, pattern: &BlockPattern, at: (i32, i32)) -> Result<Option<TileId>, SimError> {
        let mut found: Option<TileId> = None;
        for (p, t) in &self.table {
            if pattern_subsumes(p, pattern) {
                match found {
                    None => found = Some(*t),
                    Some(prev) if prev != *t => return Err(SimError::AmbiguousBlock(at)),
                    _ => {}
                }
            }
        }
        Ok(found)
    }

    fn block_pattern(&self, asm: &Assembly, bx: i32, by: i32) -> BlockPattern {
        let m = self.m;
        let mut out = Vec::with_capacity((m * m) as usize);
        for dy in 0..m {
            for dx in 0..m {
                out.push(asm.get(Point::new(bx * m + dx, by * m + dy)));
            }
        }
        out
    }

    /// Nonempty block coordinates of an assembly under this scale.
    pub fn nonempty_blocks(&self, asm: &Assembly) -> BTreeSet<(i32, i32)> {
        asm.domain()
            .map(|p| (p.x.div_euclid(self.m), p.y.div_euclid(self.m)))
            .collect()
    }
}

/// The image of an assembly under the induced assembly representation
/// function, as a macro-level placement map. Not necessarily connected, so it
/// is kept apart from [`Assembly`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MacroAssembly {
    pub placements: BTreeMap<Point, TileId>,
}

impl MacroAssembly {
    pub fn domain(&self) -> BTreeSet<Point> {
        self.placements.keys().copied().collect()
    }
}

/// Applies the representation to each nonempty m-block. Returns `None` when
/// some nonempty block is unmapped and is not legal fuzz, i.e. not within
/// Euclidean distance 1 of a mapped block (diagonal fuzz is never legal).
pub fn apply_repr(r: &BlockRepr, asm: &Assembly) -> Result<Option<MacroAssembly>, SimError> {
    let blocks = r.nonempty_blocks(asm);
    let mut mapped: BTreeMap<Point, TileId> = BTreeMap::new();
    let mut unmapped: Vec<(i32, i32)> = Vec::new();
    for &(bx, by) in &blocks {
        let pattern = r.block_pattern(asm, bx, by);
        match r.map_block(&pattern, (bx, by))? {
            Some(t) => {
                mapped.insert(Point::new(bx, by), t);
            }
            None => unmapped.push((bx, by)),
        }
    }
    let clean = unmapped.iter().all(|&(bx, by)| {
        let p = Point::new(bx, by);
        mapped.contains_key(&p) || p.neighbors().iter().any(|n| mapped.contains_key(n))
    });
    if !clean {
        return Ok(None);
    }
    Ok(Some(MacroAssembly { placements: mapped }))
}

/// True iff every nonempty unmapped block is within distance 1 of a mapped
/// block's coordinate.
pub fn maps_cleanly(r: &BlockRepr, asm: &Assembly) -> Result<bool, SimError> {
    Ok(apply_repr(r, asm)?.is_some())
}

/// Breadth-first exploration of the production set up to `depth` attachments,
/// with canonical deduplication.
pub struct Explored {
    pub depth: usize,
    /// Every distinct assembly reachable with at most `depth` attachments.
    pub productions: Vec<Assembly>,
    /// Terminal assemblies within the bound, plus the depth-`depth` frontier.
    pub bounded_terminal: Vec<Assembly>,
    /// True iff some frontier assembly still admitted attachments.
    pub truncated: bool,
}

fn canonical_key(asm: &Assembly) -> Vec<(Point, TileId)> {
    asm.tiles().map(|t| (t.pos, t.ty)).collect()
}

/// Explores all productions of `tas` to the given depth. Errors once more
/// than `cap` distinct assemblies have been seen.
pub fn explore(tas: &Tas, depth: usize, cap: usize) -> Result<Explored, SimError> {
    let mut seen: BTreeSet<Vec<(Point, TileId)>> = BTreeSet::new();
    let mut productions = Vec::new();
    let mut bounded_terminal = Vec::new();
    let mut truncated = false;
    let mut layer = vec![tas.seed().clone()];
    seen.insert(canonical_key(tas.seed()));
    for d in 0..=depth {
        let mut next = Vec::new();
        for asm in &layer {
            productions.push(asm.clone());
            let frontier = tas.frontier(asm);
            if frontier.is_empty() {
                bounded_terminal.push(asm.clone());
                continue;
            }
            if d == depth {
                bounded_terminal.push(asm.clone());
                truncated = true;
                continue;
            }
            for (pos, ty) in frontier {
                let mut grown = asm.clone();
                grown.place(pos, ty);
                let key = canonical_key(&grown);
                if seen.insert(key) {
                    if seen.len() > cap {
                        return Err(SimError::CapExceeded(cap));
                    }
                    next.push(grown);
                }
            }
        }
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    Ok(Explored { depth, productions, bounded_terminal, truncated })
}

/// Verdict of a bounded equivalence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivVerdict {
    /// Both sides agreed on everything visible within the depth bound.
    Pass { depth: usize },
    Counterexample(Counterexample),
}

impl EquivVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, EquivVerdict::Pass { .. })
    }
}

/// The first discrepancy found, with the offending assembly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// A simulator assembly that does not map cleanly.
    UncleanMapping(Assembly),
    /// A simulator assembly whose image is not produced by the target.
    ImageNotProduced(Assembly),
    /// A target production no simulator assembly maps to.
    MissingProduction(Assembly),
    /// A simulator bounded-terminal whose image is not bounded-terminal in
    /// the target.
    ImageNotTerminal(Assembly),
    /// A target bounded-terminal no simulator bounded-terminal maps to.
    MissingTerminal(Assembly),
    /// Same as above, comparing domains only.
    ShapeMismatch(Assembly),
    /// A target terminal shape never produced by the simulator.
    MissingShape(Assembly),
}

fn macro_of(asm: &Assembly) -> BTreeMap<Point, TileId> {
    asm.placements().clone()
}

/// Compares `{dom R*(alpha)}` over bounded-terminal assemblies of `s` against
/// `{dom beta}` over bounded-terminal assemblies of `t`.
pub fn equiv_terminal_shapes_bounded(
    s: &Tas,
    t: &Tas,
    r: &BlockRepr,
    depth: usize,
    cap: usize,
) -> Result<EquivVerdict, SimError> {
    let es = explore(s, depth, cap)?;
    let et = explore(t, depth, cap)?;
    let mut s_shapes: BTreeSet<BTreeSet<Point>> = BTreeSet::new();
    for asm in &es.bounded_terminal {
        match apply_repr(r, asm)? {
            None => return Ok(EquivVerdict::Counterexample(Counterexample::UncleanMapping(asm.clone()))),
            Some(mac) => {
                s_shapes.insert(mac.domain());
            }
        }
    }
    let t_shapes: BTreeSet<BTreeSet<Point>> = et
        .bounded_terminal
        .iter()
        .map(|a| a.domain().collect())
        .collect();
    for asm in &es.bounded_terminal {
        let mac = apply_repr(r, asm)?.unwrap();
        if !t_shapes.contains(&mac.domain()) {
            return Ok(EquivVerdict::Counterexample(Counterexample::ShapeMismatch(asm.clone())));
        }
    }
    for asm in &et.bounded_terminal {
        let dom: BTreeSet<Point> = asm.domain().collect();
        if !s_shapes.contains(&dom) {
            return Ok(EquivVerdict::Counterexample(Counterexample::MissingShape(asm.clone())));
        }
    }
    Ok(EquivVerdict::Pass { depth })
}

/// Checks the three production-equivalence clauses on depth-bounded sets:
/// the production-set image, the bounded-terminal-set image, and clean
/// mapping of every explored simulator assembly.
pub fn equiv_productions_bounded(
    s: &Tas,
    t: &Tas,
    r: &BlockRepr,
    depth: usize,
    cap: usize,
) -> Result<EquivVerdict, SimError> {
    let es = explore(s, depth, cap)?;
    let et = explore(t, depth, cap)?;

    let mut s_images: BTreeSet<BTreeMap<Point, TileId>> = BTreeSet::new();
    for asm in &es.productions {
        match apply_repr(r, asm)? {
            None => return Ok(EquivVerdict::Counterexample(Counterexample::UncleanMapping(asm.clone()))),
            Some(mac) => {
                s_images.insert(mac.placements);
            }
        }
    }
    let t_prods: BTreeSet<BTreeMap<Point, TileId>> = et.productions.iter().map(macro_of).collect();
    for asm in &es.productions {
        let mac = apply_repr(r, asm)?.unwrap();
        if !t_prods.contains(&mac.placements) {
            return Ok(EquivVerdict::Counterexample(Counterexample::ImageNotProduced(asm.clone())));
        }
    }
    for asm in &et.productions {
        if !s_images.contains(&macro_of(asm)) {
            return Ok(EquivVerdict::Counterexample(Counterexample::MissingProduction(asm.clone())));
        }
    }

    let mut s_term_images: BTreeSet<BTreeMap<Point, TileId>> = BTreeSet::new();
    for asm in &es.bounded_terminal {
        let mac = apply_repr(r, asm)?.unwrap();
        s_term_images.insert(mac.placements);
    }
    let t_terms: BTreeSet<BTreeMap<Point, TileId>> = et.bounded_terminal.iter().map(macro_of).collect();
    for asm in &es.bounded_terminal {
        let mac = apply_repr(r, asm)?.unwrap();
        if !t_terms.contains(&mac.placements) {
            return Ok(EquivVerdict::Counterexample(Counterexample::ImageNotTerminal(asm.clone())));
        }
    }
    for asm in &et.bounded_terminal {
        if !s_term_images.contains(&macro_of(asm)) {
            return Ok(EquivVerdict::Counterexample(Counterexample::MissingTerminal(asm.clone())));
        }
    }
    Ok(EquivVerdict::Pass { depth })
}

/// A simulation zone: supertile blocks of the simulated shape plus all
/// edge-adjacent fuzz blocks, in block coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimZone {
    pub blocks: BTreeSet<Point>,
}

impl SimZone {
    /// Expands block coordinates into the covered grid cells at scale `m`.
    pub fn cells(&self, m: i32) -> BTreeSet<Point> {
        let mut out = BTreeSet::new();
        for b in &self.blocks {
            for dx in 0..m {
                for dy in 0..m {
                    out.insert(Point::new(b.x * m + dx, b.y * m + dy));
                }
            }
        }
        out
    }
}

/// The simulation zone for the flipped-L system at scale `m`: a supertile
/// block for every tile of the terminal assembly (the vertical part truncated
/// at block row `max_by`), plus edge-adjacent fuzz.
pub fn zone_of_tn(n: usize, m: i32, max_by: i32) -> SimZone {
    assert!(n >= 1 && m >= 1);
    let mut supertiles: BTreeSet<Point> = BTreeSet::new();
    for x in 0..=(n as i32 + 1) {
        supertiles.insert(Point::new(x, 0));
    }
    for y in 1..=max_by {
        supertiles.insert(Point::new(n as i32 + 1, y));
    }
    let mut blocks = supertiles.clone();
    for b in &supertiles {
        for nb in b.neighbors() {
            blocks.insert(nb);
        }
    }
    SimZone { blocks }
}

/// Relabels every glue and tile name of a tileset with a component prefix, so
/// disjoint unions never bind across components.
pub fn prefix_tileset(tas: &Tas, prefix: &str) -> Vec<TileType> {
    tas.tile_types()
        .iter()
        .map(|t| {
            let rl = |g: &Glue| match &g.label {
                None => Glue::blank(),
                Some(l) => Glue::with_strength(&format!("{prefix}{l}"), g.strength),
            };
            let mut nt = TileType::new(&format!("{prefix}{}", t.name), rl(&t.north), rl(&t.east), rl(&t.south), rl(&t.west));
            for d in Dir::ALL {
                let g = nt.glue_mut(d);
                if g.strength > 1 {
                    g.strength = 1;
                }
            }
            nt
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tn_has_n_plus_3_tile_types() {
        assert_eq!(gen_tn(12).tile_count(), 15);
        assert_eq!(gen_tn(1).tile_count(), 4);
    }

    #[test]
    fn tn_arm_reaches_n_plus_1() {
        let tas = gen_tn(1);
        let asm = tas.grow(tas.seed(), 4, 0).final_assembly();
        assert!(asm.contains(Point::new(2, 0)));
        assert!(asm.contains(Point::new(2, 2)));
        assert!(!asm.contains(Point::new(3, 0)));
    }

    #[test]
    fn identity_repr_maps_shape_onto_itself() {
        let tas = gen_tn(2);
        let asm = tas.grow(tas.seed(), 5, 0).final_assembly();
        let r = BlockRepr::identity(tas.tile_count());
        let mac = apply_repr(&r, &asm).unwrap().unwrap();
        assert_eq!(mac.domain(), asm.domain().collect());
    }

    #[test]
    fn fuzz_must_be_edge_adjacent() {
        // target tile 0 mapped; tile 1 unmapped and used as fuzz
        let r = BlockRepr::new(1, vec![(vec![Some(TileId(0))], TileId(0))]).unwrap();
        let tas = gen_tn(1);
        drop(tas);
        let mut m = BTreeMap::new();
        m.insert(Point::new(0, 0), TileId(0));
        m.insert(Point::new(1, 0), TileId(1));
        let asm = Assembly::new(m).unwrap();
        assert!(maps_cleanly(&r, &asm).unwrap());
        // a lone unmapped block has no mapped neighbor
        let solo = Assembly::single(Point::new(5, 5), TileId(1));
        assert!(!maps_cleanly(&r, &solo).unwrap());
    }

    #[test]
    fn inconsistent_table_rejected() {
        let err = BlockRepr::new(
            2,
            vec![
                (vec![Some(TileId(0)), None, None, None], TileId(0)),
                (vec![Some(TileId(0)), Some(TileId(1)), None, None], TileId(1)),
            ],
        )
        .unwrap_err();
        assert_eq!(err, SimError::InconsistentTable);
    }

    #[test]
    fn self_simulation_at_scale_one_passes() {
        let t3 = gen_tn(3);
        let r = BlockRepr::identity(t3.tile_count());
        let v = equiv_terminal_shapes_bounded(&t3, &t3, &r, 30, 100_000).unwrap();
        assert!(v.is_pass());
        let v = equiv_productions_bounded(&t3, &t3, &r, 30, 100_000).unwrap();
        assert!(v.is_pass());
    }

    #[test]
    fn zone_of_tn_matches_adjacency_construction() {
        let z = zone_of_tn(1, 1, 3);
        // supertiles: row (0..=2, 0) and column (2, 1..=3)
        let mut expect: BTreeSet<Point> = BTreeSet::new();
        for x in 0..=2 {
            expect.insert(Point::new(x, 0));
        }
        for y in 1..=3 {
            expect.insert(Point::new(2, y));
        }
        // edge fuzz
        for p in expect.clone() {
            for n in p.neighbors() {
                expect.insert(n);
            }
        }
        assert_eq!(z.blocks, expect);
        // corners are not fuzz
        assert!(!z.blocks.contains(&Point::new(-1, 1)));
        assert!(!z.blocks.contains(&Point::new(-1, -1)));
        // scaling doubles extents
        let z2 = zone_of_tn(1, 2, 3);
        assert_eq!(z2.cells(2).len(), z2.blocks.len() * 4);
    }
}
