//! Text formats with line-numbered diagnostics and canonical serialization.
//!
//! Tileset format, one directive per line (`#` starts a comment):
//!
//! ```text
//! temp 1
//! tile <name> n=<label|-> e=<label|-> s=<label|-> w=<label|->
//! seed <x> <y> <name>
//! ```
//!
//! Path format: one `x y tile-name` per line, in path order.
//!
//! Representation-table format:
//!
//! ```text
//! block <m> <rows> -> <target-tile>
//! ```
//!
//! where `<rows>` lists the m rows north to south separated by `;`, each row
//! m cells separated by `,`, and `.` is an empty cell.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::model::{Assembly, Dir, Glue, Point, Tas, Tile, TileId, TileType};
use crate::path::Path;
use crate::sim::{BlockPattern, BlockRepr};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, msg: msg.into() })
}

fn parse_glue(tok: &str) -> Glue {
    if tok == "-" {
        Glue::blank()
    } else {
        Glue::new(tok)
    }
}

fn glue_text(g: &Glue) -> String {
    match &g.label {
        None => "-".into(),
        Some(l) => l.clone(),
    }
}

/// Parses a tile assembly system. Directives may come in any order; seeds may
/// reference tiles declared later.
pub fn parse_tas(text: &str) -> Result<Tas, ParseError> {
    let mut types: Vec<TileType> = Vec::new();
    let mut names: BTreeMap<String, TileId> = BTreeMap::new();
    let mut seeds: Vec<(usize, i32, i32, String)> = Vec::new();
    let mut temp: Option<(usize, u8)> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        match words.next().unwrap() {
            "temp" => {
                let t = words
                    .next()
                    .and_then(|w| w.parse::<u8>().ok())
                    .ok_or(ParseError { line, msg: "temp needs an integer".into() })?;
                temp = Some((line, t));
            }
            "tile" => {
                let name = match words.next() {
                    Some(n) => n.to_owned(),
                    None => return err(line, "tile needs a name"),
                };
                if names.contains_key(&name) {
                    return err(line, format!("duplicate tile name {name:?}"));
                }
                let mut glues: [Option<Glue>; 4] = Default::default();
                for w in words {
                    let (side, val) = match w.split_once('=') {
                        Some(kv) => kv,
                        None => return err(line, format!("expected side=glue, got {w:?}")),
                    };
                    let idx = match side {
                        "n" => 0,
                        "e" => 1,
                        "s" => 2,
                        "w" => 3,
                        _ => return err(line, format!("unknown side {side:?}")),
                    };
                    glues[idx] = Some(parse_glue(val));
                }
                let g = |i: usize| glues[i].clone().unwrap_or_else(Glue::blank);
                names.insert(name.clone(), TileId(types.len()));
                types.push(TileType::new(&name, g(0), g(1), g(2), g(3)));
            }
            "seed" => {
                let mut coord = |what: &str| -> Result<i32, ParseError> {
                    words
                        .next()
                        .and_then(|w| w.parse::<i32>().ok())
                        .ok_or(ParseError { line, msg: format!("seed needs integer {what}") })
                };
                let x = coord("x")?;
                let y = coord("y")?;
                let name = match words.next() {
                    Some(n) => n.to_owned(),
                    None => return err(line, "seed needs a tile name"),
                };
                seeds.push((line, x, y, name));
            }
            other => return err(line, format!("unknown directive {other:?}")),
        }
    }
    if types.is_empty() {
        return err(0, "no tiles");
    }
    if seeds.is_empty() {
        return err(0, "no seed");
    }
    let temperature = match temp {
        None => 1,
        Some((line, t)) => {
            if t != 1 {
                return err(line, format!("temperature must be 1, got {t}"));
            }
            t
        }
    };
    let mut placements = BTreeMap::new();
    for (line, x, y, name) in seeds {
        let id = match names.get(&name) {
            Some(id) => *id,
            None => return err(line, format!("seed references undeclared tile {name:?}")),
        };
        if placements.insert(Point::new(x, y), id).is_some() {
            return err(line, format!("duplicate seed position ({x},{y})"));
        }
    }
    let seed = Assembly::new(placements).map_err(|e| ParseError { line: 0, msg: e.to_string() })?;
    Tas::new(types, seed, temperature).map_err(|e| ParseError { line: 0, msg: e.to_string() })
}

/// Canonical text for a system: temperature, tiles in declaration order,
/// seed tiles in position order.
pub fn serialize_tas(tas: &Tas) -> String {
    let mut out = String::from("temp 1\n");
    for t in tas.tile_types() {
        out.push_str(&format!(
            "tile {} n={} e={} s={} w={}\n",
            t.name,
            glue_text(&t.north),
            glue_text(&t.east),
            glue_text(&t.south),
            glue_text(&t.west)
        ));
    }
    for t in tas.seed().tiles() {
        out.push_str(&format!("seed {} {} {}\n", t.pos.x, t.pos.y, tas.tile(t.ty).name));
    }
    out
}

/// Parses a path against a system's tile names, validating it fully.
pub fn parse_path(text: &str, tas: &Tas) -> Result<Path, ParseError> {
    let mut tiles = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let x = words
            .next()
            .and_then(|w| w.parse::<i32>().ok())
            .ok_or(ParseError { line, msg: "expected x coordinate".into() })?;
        let y = words
            .next()
            .and_then(|w| w.parse::<i32>().ok())
            .ok_or(ParseError { line, msg: "expected y coordinate".into() })?;
        let name = match words.next() {
            Some(n) => n,
            None => return err(line, "expected tile name"),
        };
        let id = match tas.tile_id_by_name(name) {
            Some(id) => id,
            None => return err(line, format!("unknown tile {name:?}")),
        };
        tiles.push(Tile::new(Point::new(x, y), id));
    }
    if tiles.is_empty() {
        return err(0, "empty path");
    }
    Path::new(tiles, tas).map_err(|e| ParseError { line: 0, msg: e.to_string() })
}

pub fn serialize_path(p: &Path, tas: &Tas) -> String {
    let mut out = String::new();
    for t in p.tiles() {
        out.push_str(&format!("{} {} {}\n", t.pos.x, t.pos.y, tas.tile(t.ty).name));
    }
    out
}

/// Parses a representation table against the simulator (pattern cells) and
/// target (right-hand sides) tilesets.
pub fn parse_repr(text: &str, source: &Tas, target: &Tas) -> Result<BlockRepr, ParseError> {
    let mut m: Option<i32> = None;
    let mut table = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let rest = match content.strip_prefix("block ") {
            Some(r) => r,
            None => return err(line, "expected a block directive"),
        };
        let (head, target_name) = match rest.split_once("->") {
            Some((h, t)) => (h.trim(), t.trim()),
            None => return err(line, "expected '-> target-tile'"),
        };
        let mut words = head.split_whitespace();
        let this_m = words
            .next()
            .and_then(|w| w.parse::<i32>().ok())
            .ok_or(ParseError { line, msg: "block needs a scale".into() })?;
        match m {
            None => m = Some(this_m),
            Some(prev) if prev != this_m => {
                return err(line, format!("scale {this_m} differs from earlier {prev}"))
            }
            _ => {}
        }
        let rows_text = words.collect::<Vec<_>>().join("");
        let rows: Vec<&str> = rows_text.split(';').collect();
        if rows.len() != this_m as usize {
            return err(line, format!("expected {this_m} rows, got {}", rows.len()));
        }
        // rows are listed north to south; patterns are stored south-west first
        let mut pattern: BlockPattern = vec![None; (this_m * this_m) as usize];
        for (r, row) in rows.iter().enumerate() {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != this_m as usize {
                return err(line, format!("expected {this_m} cells per row, got {}", cells.len()));
            }
            for (c, cell) in cells.iter().enumerate() {
                let cell = cell.trim();
                if cell == "." {
                    continue;
                }
                let id = match source.tile_id_by_name(cell) {
                    Some(id) => id,
                    None => return err(line, format!("unknown simulator tile {cell:?}")),
                };
                let y = this_m as usize - 1 - r;
                pattern[y * this_m as usize + c] = Some(id);
            }
        }
        let target_id = match target.tile_id_by_name(target_name) {
            Some(id) => id,
            None => return err(line, format!("unknown target tile {target_name:?}")),
        };
        table.push((pattern, target_id));
    }
    let m = match m {
        Some(m) => m,
        None => return err(0, "empty representation table"),
    };
    BlockRepr::new(m, table).map_err(|e| ParseError { line: 0, msg: e.to_string() })
}

pub fn serialize_repr(r: &BlockRepr, source: &Tas, target: &Tas) -> String {
    let m = r.m();
    let mut out = String::new();
    for (pattern, t) in r.table() {
        let mut rows = Vec::new();
        for row in (0..m).rev() {
            let cells: Vec<String> = (0..m)
                .map(|c| match pattern[(row * m + c) as usize] {
                    None => ".".into(),
                    Some(id) => source.tile(id).name.clone(),
                })
                .collect();
            rows.push(cells.join(","));
        }
        out.push_str(&format!("block {} {} -> {}\n", m, rows.join(";"), target.tile(*t).name));
    }
    out
}

/// Canonical text for an assembly: one `x y tile-name` per line in position
/// order.
pub fn serialize_assembly(asm: &Assembly, tas: &Tas) -> String {
    let mut out = String::new();
    for t in asm.tiles() {
        out.push_str(&format!("{} {} {}\n", t.pos.x, t.pos.y, tas.tile(t.ty).name));
    }
    out
}

/// Side-table text used in reports: which sides of each tile carry glues.
pub fn tile_summary(tas: &Tas) -> String {
    let mut out = String::new();
    for (id, t) in tas.tile_types().iter().enumerate() {
        out.push_str(&format!("#{id} {}:", t.name));
        for d in Dir::ALL {
            if let Some(l) = &t.glue(d).label {
                out.push_str(&format!(" {}={l}", d.short()));
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::gen_tn;

    #[test]
    fn flipped_l_round_trips() {
        let tas = gen_tn(12);
        let text = serialize_tas(&tas);
        let back = parse_tas(&text).unwrap();
        assert_eq!(back.tile_count(), 15);
        assert_eq!(serialize_tas(&back), text);
        let grown = back.grow(back.seed(), 18, 0).final_assembly();
        assert_eq!(grown.len(), 19);
    }

    #[test]
    fn empty_file_errors() {
        assert_eq!(parse_tas("").unwrap_err().msg, "no tiles");
        assert_eq!(parse_tas("# only a comment\n").unwrap_err().msg, "no tiles");
    }

    #[test]
    fn unknown_tile_in_path_reports_its_line() {
        let tas = gen_tn(2);
        let e = parse_path("1 0 a1\n2 0 nosuch\n", &tas).unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("nosuch"));
    }

    #[test]
    fn path_round_trips() {
        let tas = gen_tn(3);
        let asm = tas.grow(tas.seed(), 7, 0).final_assembly();
        let p = tas.extract_path(&asm, Point::new(4, 2)).unwrap();
        let text = serialize_path(&p, &tas);
        let back = parse_path(&text, &tas).unwrap();
        assert_eq!(back, p);
        assert_eq!(serialize_path(&back, &tas), text);
    }

    #[test]
    fn seed_with_unknown_tile_reports_line() {
        let e = parse_tas("tile a e=g\nseed 0 0 b\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn repr_round_trips() {
        let t2 = gen_tn(2);
        let text = "block 1 seed -> seed\nblock 1 a1 -> a1\n";
        let r = parse_repr(text, &t2, &t2).unwrap();
        assert_eq!(r.m(), 1);
        assert_eq!(serialize_repr(&r, &t2, &t2), text);
    }

    #[test]
    fn repr_row_order_is_north_first() {
        let t2 = gen_tn(2);
        let text = "block 2 a1,.;seed,a2 -> seed\n";
        let r = parse_repr(text, &t2, &t2).unwrap();
        let (pattern, _) = &r.table()[0];
        // south-west order: (0,0)=seed (1,0)=a2 (0,1)=a1 (1,1)=.
        let seed = t2.tile_id_by_name("seed");
        let a1 = t2.tile_id_by_name("a1");
        let a2 = t2.tile_id_by_name("a2");
        assert_eq!(pattern[0], seed);
        assert_eq!(pattern[1], a2);
        assert_eq!(pattern[2], a1);
        assert_eq!(pattern[3], None);
        assert_eq!(serialize_repr(&r, &t2, &t2), text);
    }

    #[test]
    fn bad_temperature_rejected() {
        let e = parse_tas("temp 2\ntile a e=g\nseed 0 0 a\n").unwrap_err();
        assert_eq!(e.line, 1);
    }
}
