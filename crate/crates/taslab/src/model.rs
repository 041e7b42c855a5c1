//! The temperature-1 abstract tile assembly model: tile types, glues,
//! assemblies, attachment, producibility and terminality.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Convention: +x east, +y north.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

/// Displacement between two points of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vec2 {
    pub dx: i32,
    pub dy: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Point { x, y }
    }

    pub fn neighbor(self, d: Dir) -> Point {
        self + d.step()
    }

    pub fn neighbors(self) -> [Point; 4] {
        Dir::ALL.map(|d| self.neighbor(d))
    }

    pub fn manhattan(self, other: Point) -> i32 {
        (self.x - other.x).abs() + (self.y - other.y).abs()
    }
}

impl Vec2 {
    pub const fn new(dx: i32, dy: i32) -> Self {
        Vec2 { dx, dy }
    }

    pub const ZERO: Vec2 = Vec2 { dx: 0, dy: 0 };

    pub fn is_zero(self) -> bool {
        self == Vec2::ZERO
    }

    pub fn scaled(self, k: i32) -> Vec2 {
        Vec2::new(self.dx * k, self.dy * k)
    }

    pub fn linf(self) -> i32 {
        self.dx.abs().max(self.dy.abs())
    }
}

impl std::ops::Add<Vec2> for Point {
    type Output = Point;
    fn add(self, v: Vec2) -> Point {
        Point::new(self.x + v.dx, self.y + v.dy)
    }
}

impl std::ops::Sub for Point {
    type Output = Vec2;
    fn sub(self, other: Point) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.dx, -self.dy)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The four sides of a tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    North,
    East,
    South,
    West,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::North, Dir::East, Dir::South, Dir::West];

    pub fn opposite(self) -> Dir {
        match self {
            Dir::North => Dir::South,
            Dir::East => Dir::West,
            Dir::South => Dir::North,
            Dir::West => Dir::East,
        }
    }

    pub fn step(self) -> Vec2 {
        match self {
            Dir::North => Vec2::new(0, 1),
            Dir::East => Vec2::new(1, 0),
            Dir::South => Vec2::new(0, -1),
            Dir::West => Vec2::new(-1, 0),
        }
    }

    /// Rotation by 90 degrees clockwise: (x, y) -> (y, -x).
    pub fn rotate_cw(self) -> Dir {
        match self {
            Dir::North => Dir::East,
            Dir::East => Dir::South,
            Dir::South => Dir::West,
            Dir::West => Dir::North,
        }
    }

    pub fn rotate_ccw(self) -> Dir {
        self.rotate_cw().opposite()
    }

    pub fn from_step(v: Vec2) -> Option<Dir> {
        Dir::ALL.into_iter().find(|d| d.step() == v)
    }

    pub fn index(self) -> usize {
        match self {
            Dir::North => 0,
            Dir::East => 1,
            Dir::South => 2,
            Dir::West => 3,
        }
    }

    pub fn short(self) -> char {
        match self {
            Dir::North => 'n',
            Dir::East => 'e',
            Dir::South => 's',
            Dir::West => 'w',
        }
    }
}

/// One side of a tile type: an optional glue label and a strength.
///
/// A `None` label is a blank side. Strengths are normalized to {0, 1} when a
/// system is built; at temperature 1 any strength >= 1 behaves the same.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Glue {
    pub label: Option<String>,
    pub strength: u8,
}

impl Glue {
    pub fn blank() -> Glue {
        Glue { label: None, strength: 0 }
    }

    pub fn new(label: &str) -> Glue {
        Glue { label: Some(label.to_owned()), strength: 1 }
    }

    pub fn with_strength(label: &str, strength: u8) -> Glue {
        Glue { label: Some(label.to_owned()), strength }
    }

    pub fn is_blank(&self) -> bool {
        self.label.is_none()
    }
}

/// Two abutting sides bind iff their glue labels are equal, non-blank, and
/// both strengths are >= 1.
pub fn glues_bind(a: &Glue, b: &Glue) -> bool {
    match (&a.label, &b.label) {
        (Some(la), Some(lb)) => la == lb && a.strength >= 1 && b.strength >= 1,
        _ => false,
    }
}

/// Index of a tile type in its tileset. Declaration order doubles as the
/// canonical ordering of tile types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TileId(pub usize);

impl fmt::Display for TileId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A unit square tile type with four glued sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileType {
    pub name: String,
    pub north: Glue,
    pub east: Glue,
    pub south: Glue,
    pub west: Glue,
}

impl TileType {
    pub fn new(name: &str, north: Glue, east: Glue, south: Glue, west: Glue) -> TileType {
        TileType { name: name.to_owned(), north, east, south, west }
    }

    pub fn blank(name: &str) -> TileType {
        TileType::new(name, Glue::blank(), Glue::blank(), Glue::blank(), Glue::blank())
    }

    pub fn glue(&self, d: Dir) -> &Glue {
        match d {
            Dir::North => &self.north,
            Dir::East => &self.east,
            Dir::South => &self.south,
            Dir::West => &self.west,
        }
    }

    pub fn glue_mut(&mut self, d: Dir) -> &mut Glue {
        match d {
            Dir::North => &mut self.north,
            Dir::East => &mut self.east,
            Dir::South => &mut self.south,
            Dir::West => &mut self.west,
        }
    }
}

/// A placed tile: a position of the grid together with a tile type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tile {
    pub pos: Point,
    pub ty: TileId,
}

impl Tile {
    pub fn new(pos: Point, ty: TileId) -> Tile {
        Tile { pos, ty }
    }

    pub fn translated(self, v: Vec2) -> Tile {
        Tile { pos: self.pos + v, ty: self.ty }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("assembly domain is empty")]
    EmptyAssembly,
    #[error("assembly domain is not connected")]
    DisconnectedAssembly,
    #[error("seed is not 1-stable: its binding graph is not connected")]
    UnstableSeed,
    #[error("unknown tile id {0}")]
    UnknownTile(TileId),
    #[error("temperature must be 1, got {0}")]
    BadTemperature(u8),
    #[error("position {0} is not in the assembly")]
    Unoccupied(Point),
    #[error("assembly does not contain the seed")]
    MissingSeed,
    #[error("assembly is not producible from the seed (replay got stuck)")]
    NotProducible,
}

/// A finite partial map from grid points to tile types with connected domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assembly {
    placements: BTreeMap<Point, TileId>,
}

impl Assembly {
    /// Builds an assembly, checking the domain is non-empty and edge-connected.
    pub fn new(placements: BTreeMap<Point, TileId>) -> Result<Assembly, ModelError> {
        if placements.is_empty() {
            return Err(ModelError::EmptyAssembly);
        }
        let start = *placements.keys().next().unwrap();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(p) = queue.pop_front() {
            for n in p.neighbors() {
                if placements.contains_key(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        if seen.len() != placements.len() {
            return Err(ModelError::DisconnectedAssembly);
        }
        Ok(Assembly { placements })
    }

    pub fn single(pos: Point, ty: TileId) -> Assembly {
        Assembly { placements: BTreeMap::from([(pos, ty)]) }
    }

    pub fn get(&self, p: Point) -> Option<TileId> {
        self.placements.get(&p).copied()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.placements.contains_key(&p)
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    /// Tiles in deterministic (position) order.
    pub fn tiles(&self) -> impl Iterator<Item = Tile> + '_ {
        self.placements.iter().map(|(&pos, &ty)| Tile { pos, ty })
    }

    pub fn domain(&self) -> impl Iterator<Item = Point> + '_ {
        self.placements.keys().copied()
    }

    pub fn placements(&self) -> &BTreeMap<Point, TileId> {
        &self.placements
    }

    /// Places a tile without connectivity re-validation. The position must be
    /// adjacent to the current domain for the invariant to be preserved.
    pub fn place(&mut self, pos: Point, ty: TileId) {
        self.placements.insert(pos, ty);
    }

    /// True iff `other` is a subassembly: same tile type wherever defined.
    pub fn is_subassembly_of(&self, other: &Assembly) -> bool {
        self.placements.iter().all(|(p, t)| other.get(*p) == Some(*t))
    }

    /// Shares a position with a different tile type.
    pub fn conflicts_with(&self, other: &Assembly) -> bool {
        self.placements
            .iter()
            .any(|(p, t)| other.get(*p).is_some_and(|u| u != *t))
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        let mut min = Point::new(i32::MAX, i32::MAX);
        let mut max = Point::new(i32::MIN, i32::MIN);
        for p in self.placements.keys() {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        (min, max)
    }
}

/// A temperature-1 tile assembly system: a tileset, a 1-stable seed assembly,
/// and the temperature (always 1).
#[derive(Debug, Clone)]
pub struct Tas {
    tile_types: Vec<TileType>,
    seed: Assembly,
    temperature: u8,
    // binds[a][dir][b]: tile a's `dir` side binds tile b's opposite side
    bonds: Vec<[Vec<bool>; 4]>,
}

impl Tas {
    /// Builds a system. Glue strengths are normalized to {0,1}; the seed must
    /// reference known tiles and be 1-stable (binding graph connected).
    pub fn new(mut tile_types: Vec<TileType>, seed: Assembly, temperature: u8) -> Result<Tas, ModelError> {
        if temperature != 1 {
            return Err(ModelError::BadTemperature(temperature));
        }
        for t in &mut tile_types {
            for d in Dir::ALL {
                let g = t.glue_mut(d);
                if g.strength > 1 {
                    g.strength = 1;
                }
            }
        }
        let n = tile_types.len();
        for (_, &ty) in seed.placements.iter() {
            if ty.0 >= n {
                return Err(ModelError::UnknownTile(ty));
            }
        }
        let mut bonds = Vec::with_capacity(n);
        for a in &tile_types {
            let mut per_dir: [Vec<bool>; 4] = Default::default();
            for d in Dir::ALL {
                per_dir[d.index()] = tile_types
                    .iter()
                    .map(|b| glues_bind(a.glue(d), b.glue(d.opposite())))
                    .collect();
            }
            bonds.push(per_dir);
        }
        let tas = Tas { tile_types, seed, temperature, bonds };
        if !tas.assembly_is_stable(&tas.seed) {
            return Err(ModelError::UnstableSeed);
        }
        Ok(tas)
    }

    pub fn tile_types(&self) -> &[TileType] {
        &self.tile_types
    }

    pub fn tile(&self, id: TileId) -> &TileType {
        &self.tile_types[id.0]
    }

    pub fn tile_count(&self) -> usize {
        self.tile_types.len()
    }

    pub fn seed(&self) -> &Assembly {
        &self.seed
    }

    pub fn temperature(&self) -> u8 {
        self.temperature
    }

    pub fn tile_id_by_name(&self, name: &str) -> Option<TileId> {
        self.tile_types.iter().position(|t| t.name == name).map(TileId)
    }

    /// True iff `a`'s glue on `side` and `b`'s glue on the opposite side have
    /// equal non-blank labels and strength >= 1.
    pub fn binds(&self, a: TileId, side: Dir, b: TileId) -> bool {
        self.bonds[a.0][side.index()][b.0]
    }

    /// At temperature 1, an assembly is stable iff every cut of its binding
    /// graph has weight >= 1, i.e. the binding graph is connected.
    pub fn assembly_is_stable(&self, asm: &Assembly) -> bool {
        let start = match asm.placements.keys().next() {
            Some(p) => *p,
            None => return false,
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            let a = asm.get(p).unwrap();
            for d in Dir::ALL {
                let q = p.neighbor(d);
                if let Some(b) = asm.get(q) {
                    if self.binds(a, d, b) && seen.insert(q) {
                        queue.push_back(q);
                    }
                }
            }
        }
        seen.len() == asm.len()
    }

    /// True iff `pos` is empty and `t` stably binds some adjacent placed tile.
    pub fn attachable(&self, asm: &Assembly, pos: Point, t: TileId) -> bool {
        if asm.contains(pos) {
            return false;
        }
        Dir::ALL.into_iter().any(|d| {
            asm.get(pos.neighbor(d))
                .is_some_and(|b| self.binds(t, d, b))
        })
    }

    /// All attachable (position, tile type) pairs, in deterministic order.
    pub fn frontier(&self, asm: &Assembly) -> Vec<(Point, TileId)> {
        let mut out = BTreeSet::new();
        for (&p, _) in asm.placements.iter() {
            for n in p.neighbors() {
                if asm.contains(n) {
                    continue;
                }
                for id in 0..self.tile_types.len() {
                    let t = TileId(id);
                    if self.attachable(asm, n, t) {
                        out.insert((n, t));
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// True iff no tile can attach anywhere.
    pub fn is_terminal(&self, asm: &Assembly) -> bool {
        self.frontier(asm).is_empty()
    }

    /// Samples one assembly sequence of at most `steps` attachments, choosing
    /// uniformly among attachable pairs with the seeded generator. Stops early
    /// only if a terminal assembly is reached.
    pub fn grow(&self, asm: &Assembly, steps: usize, rng_seed: u64) -> AssemblySequence {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let mut current = asm.clone();
        let mut recorded = Vec::new();
        for _ in 0..steps {
            let frontier = self.frontier(&current);
            let Some(&(pos, ty)) = frontier.choose(&mut rng) else {
                break;
            };
            current.place(pos, ty);
            recorded.push((pos, ty));
        }
        AssemblySequence { start: asm.clone(), steps: recorded }
    }

    /// Grows until terminal or until `max_steps` attachments have been made.
    /// Returns the final assembly and whether it is terminal.
    pub fn grow_to_terminal(&self, max_steps: usize, rng_seed: u64) -> (Assembly, bool) {
        let seq = self.grow(&self.seed, max_steps, rng_seed);
        let asm = seq.final_assembly();
        let terminal = self.is_terminal(&asm);
        (asm, terminal)
    }

    /// Reconstructs a witnessing assembly sequence for a producible assembly
    /// by greedy replay from the seed. At temperature 1 any attachable tile of
    /// the target can be placed eagerly, so replay succeeds iff the assembly is
    /// producible.
    pub fn replay(&self, asm: &Assembly) -> Result<AssemblySequence, ModelError> {
        if !self.seed.is_subassembly_of(asm) {
            return Err(ModelError::MissingSeed);
        }
        let mut current = self.seed.clone();
        let mut steps = Vec::new();
        let mut queue: VecDeque<Point> = self.seed.domain().collect();
        let mut enqueued: BTreeSet<Point> = self.seed.domain().collect();
        while let Some(p) = queue.pop_front() {
            let here = current.get(p).unwrap();
            for d in Dir::ALL {
                let q = p.neighbor(d);
                if current.contains(q) || enqueued.contains(&q) {
                    continue;
                }
                if let Some(t) = asm.get(q) {
                    if self.binds(t, d.opposite(), here) {
                        current.place(q, t);
                        steps.push((q, t));
                        enqueued.insert(q);
                        queue.push_back(q);
                    }
                }
            }
        }
        if current.len() != asm.len() {
            return Err(ModelError::NotProducible);
        }
        Ok(AssemblySequence { start: self.seed.clone(), steps })
    }

    /// Returns a producible path whose last tile occupies `target`, found by
    /// replaying a witnessing assembly sequence and tracing binding edges back
    /// to the seed. Seed targets yield a single-tile path.
    pub fn extract_path(&self, asm: &Assembly, target: Point) -> Result<crate::path::Path, ModelError> {
        let target_ty = asm.get(target).ok_or(ModelError::Unoccupied(target))?;
        if self.seed.contains(target) {
            return Ok(crate::path::Path::new_unchecked(vec![Tile::new(target, target_ty)]));
        }
        let seq = self.replay(asm)?;
        // parent[p] = the already-placed neighbor p bound to when it attached
        let mut placed = self.seed.clone();
        let mut parent: BTreeMap<Point, Point> = BTreeMap::new();
        for &(pos, ty) in &seq.steps {
            for d in Dir::ALL {
                let q = pos.neighbor(d);
                if let Some(b) = placed.get(q) {
                    if self.binds(ty, d, b) {
                        parent.insert(pos, q);
                        break;
                    }
                }
            }
            placed.place(pos, ty);
        }
        let mut chain = vec![target];
        let mut cursor = target;
        while let Some(&prev) = parent.get(&cursor) {
            chain.push(prev);
            cursor = prev;
            if self.seed.contains(prev) {
                break;
            }
        }
        chain.reverse();
        let tiles = chain
            .into_iter()
            .map(|p| Tile::new(p, asm.get(p).unwrap()))
            .collect();
        Ok(crate::path::Path::new_unchecked(tiles))
    }
}

/// A record of growth: a start assembly and the attachments made, in order.
#[derive(Debug, Clone)]
pub struct AssemblySequence {
    pub start: Assembly,
    pub steps: Vec<(Point, TileId)>,
}

impl AssemblySequence {
    pub fn final_assembly(&self) -> Assembly {
        let mut asm = self.start.clone();
        for &(p, t) in &self.steps {
            asm.place(p, t);
        }
        asm
    }

    /// Checks each step attaches stably at an empty position.
    pub fn is_valid(&self, tas: &Tas) -> bool {
        let mut asm = self.start.clone();
        for &(p, t) in &self.steps {
            if !tas.attachable(&asm, p, t) {
                return false;
            }
            asm.place(p, t);
        }
        true
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::gen_tn;

    fn two_tile_tas() -> Tas {
        // seed with east glue g, one tile with matching west glue
        let seed_t = TileType::new("s", Glue::blank(), Glue::new("g"), Glue::blank(), Glue::blank());
        let t = TileType::new("t", Glue::blank(), Glue::blank(), Glue::blank(), Glue::new("g"));
        let seed = Assembly::single(Point::new(0, 0), TileId(0));
        Tas::new(vec![seed_t, t], seed, 1).unwrap()
    }

    #[test]
    fn binds_requires_equal_labels_and_strength() {
        let a = Glue::new("g");
        let b = Glue::new("g");
        let c = Glue::new("h");
        let z = Glue::with_strength("g", 0);
        assert!(glues_bind(&a, &b));
        assert!(!glues_bind(&a, &c));
        assert!(!glues_bind(&z, &z.clone()));
        assert!(!glues_bind(&Glue::blank(), &Glue::blank()));
    }

    #[test]
    fn attachable_needs_adjacent_matching_glue() {
        let tas = two_tile_tas();
        let asm = tas.seed().clone();
        assert!(tas.attachable(&asm, Point::new(1, 0), TileId(1)));
        assert!(!tas.attachable(&asm, Point::new(2, 0), TileId(1)));
        assert!(!tas.attachable(&asm, Point::new(0, 0), TileId(1)));
    }

    #[test]
    fn strengths_above_one_are_normalized() {
        let seed_t = TileType::new(
            "s",
            Glue::blank(),
            Glue::with_strength("g", 5),
            Glue::blank(),
            Glue::blank(),
        );
        let t = TileType::new("t", Glue::blank(), Glue::blank(), Glue::blank(), Glue::new("g"));
        let seed = Assembly::single(Point::new(0, 0), TileId(0));
        let tas = Tas::new(vec![seed_t, t], seed, 1).unwrap();
        assert_eq!(tas.tile(TileId(0)).east.strength, 1);
        assert!(tas.binds(TileId(0), Dir::East, TileId(1)));
    }

    #[test]
    fn disconnected_assembly_rejected() {
        let mut m = BTreeMap::new();
        m.insert(Point::new(0, 0), TileId(0));
        m.insert(Point::new(2, 0), TileId(0));
        assert_eq!(Assembly::new(m).unwrap_err(), ModelError::DisconnectedAssembly);
    }

    #[test]
    fn unstable_seed_rejected() {
        // two adjacent seed tiles with no glue between them
        let t = TileType::blank("t");
        let mut m = BTreeMap::new();
        m.insert(Point::new(0, 0), TileId(0));
        m.insert(Point::new(1, 0), TileId(0));
        let seed = Assembly::new(m).unwrap();
        assert_eq!(Tas::new(vec![t], seed, 1).unwrap_err(), ModelError::UnstableSeed);
    }

    #[test]
    fn zero_steps_grow_is_empty() {
        let tas = two_tile_tas();
        let seq = tas.grow(tas.seed(), 0, 7);
        assert!(seq.is_empty());
        assert_eq!(seq.final_assembly(), *tas.seed());
    }

    #[test]
    fn grow_is_deterministic_for_fixed_seed() {
        let tas = gen_tn(3);
        let a = tas.grow(tas.seed(), 9, 42);
        let b = tas.grow(tas.seed(), 9, 42);
        assert_eq!(a.steps, b.steps);
        assert!(a.is_valid(&tas));
    }

    #[test]
    fn flipped_l_after_7_steps_is_a_row() {
        let tas = gen_tn(12);
        let asm = tas.grow(tas.seed(), 7, 0).final_assembly();
        let expect: BTreeSet<Point> = (0..=7).map(|x| Point::new(x, 0)).collect();
        assert_eq!(asm.domain().collect::<BTreeSet<_>>(), expect);
    }

    #[test]
    fn flipped_l_after_18_steps_has_arm_and_column() {
        let tas = gen_tn(12);
        let asm = tas.grow(tas.seed(), 18, 0).final_assembly();
        let mut expect: BTreeSet<Point> = (0..=13).map(|x| Point::new(x, 0)).collect();
        expect.extend((1..=5).map(|y| Point::new(13, y)));
        assert_eq!(asm.domain().collect::<BTreeSet<_>>(), expect);
        assert!(!tas.is_terminal(&asm));
    }

    #[test]
    fn isolated_seed_with_unmatched_glues_is_terminal() {
        // four distinct labels: no side of any copy matches any other side
        let seed_t = TileType::new("s", Glue::new("a"), Glue::new("b"), Glue::new("c"), Glue::new("d"));
        let t = TileType::new("t", Glue::blank(), Glue::blank(), Glue::blank(), Glue::new("y"));
        let seed = Assembly::single(Point::new(0, 0), TileId(0));
        let tas = Tas::new(vec![seed_t, t], seed, 1).unwrap();
        assert!(tas.is_terminal(tas.seed()));
    }

    #[test]
    fn extract_path_traces_the_flipped_l() {
        let tas = gen_tn(12);
        let asm = tas.grow(tas.seed(), 18, 0).final_assembly();
        let p = tas.extract_path(&asm, Point::new(13, 5)).unwrap();
        assert_eq!(p.len(), 19);
        assert_eq!(p.first().pos, Point::new(0, 0));
        assert_eq!(p.last().pos, Point::new(13, 5));
        // replaying the path's own growth order reproduces the assembly
        let seq = tas.replay(&asm).unwrap();
        assert!(seq.is_valid(&tas));
    }

    #[test]
    fn extract_path_of_seed_position_is_singleton() {
        let tas = gen_tn(3);
        let asm = tas.grow(tas.seed(), 4, 0).final_assembly();
        let p = tas.extract_path(&asm, Point::new(0, 0)).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn extract_path_unoccupied_target_errors() {
        let tas = gen_tn(3);
        let err = tas.extract_path(tas.seed(), Point::new(9, 9)).unwrap_err();
        assert_eq!(err, ModelError::Unoccupied(Point::new(9, 9)));
    }

    #[test]
    fn grown_assemblies_are_stable_and_connected() {
        let tas = gen_tn(4);
        for seed in 0..5u64 {
            let asm = tas.grow(tas.seed(), 11, seed).final_assembly();
            assert!(tas.assembly_is_stable(&asm));
            assert!(Assembly::new(asm.placements().clone()).is_ok());
        }
    }
}
