//! Command-line interface: one subcommand per capability, all delegating to
//! the library. Exit codes: 0 pass/ok, 1 counterexample or violation found
//! (with an artifact written), 2 usage or parse error, 3 cap exceeded.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::blocking::{
    block_all, manhattan_radius, BlockAllOutcome, BlockConfig, BlockError,
    PumpOrEnclose, Zone,
};
use crate::io;
use crate::model::{Point, Tas};
use crate::path::{is_pumpable, pumping_sequence, PumpSpec, PumpVerdict};
use crate::reduction::{check_rect_conditions, modify_tileset_for_reduction, RectBound, RectVerdict};
use crate::render::{render_svg, Layer, RenderSpec};
use crate::sim::{equiv_productions_bounded, equiv_terminal_shapes_bounded, gen_tn, EquivVerdict};
use crate::visibility::{visible_glues, VLine};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FOUND: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "taslab", version, about = "Exact laboratory for temperature-1 tile self-assembly")]
pub struct Cli {
    /// Seed for every randomized operation; growth is deterministic given it.
    #[arg(long, global = true, default_value_t = 0)]
    pub rng_seed: u64,
    /// Depth bound for bounded exploration.
    #[arg(long, global = true, default_value_t = 40)]
    pub max_depth: usize,
    /// Guard against enumeration blow-up.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub cap: usize,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Grow a system for a number of steps and print the assembly.
    Simulate {
        tileset: PathBuf,
        #[arg(long)]
        steps: usize,
        /// Also write an SVG snapshot.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Grow a system and print the producible path ending at a target cell.
    Paths {
        tileset: PathBuf,
        #[arg(long)]
        steps: usize,
        /// Target position as x,y.
        #[arg(long)]
        target: String,
    },
    /// Report the visible glues of a path, south rays and orientations.
    Visibility {
        tileset: PathBuf,
        path: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print a pumping of a path, or decide its infinite pumpability.
    Pump {
        tileset: PathBuf,
        path: PathBuf,
        #[arg(short, long)]
        i: usize,
        #[arg(short, long)]
        j: usize,
        /// Print this many elements instead of deciding.
        #[arg(long)]
        length: Option<usize>,
    },
    /// Block every h-successful path of a system inside a rectangular zone.
    Block {
        tileset: PathBuf,
        #[arg(long)]
        h: i32,
        /// Zone rectangle as x0,y0,x1,y1.
        #[arg(long)]
        zone: String,
        /// Doubled x-coordinate of the vertical line (odd integer).
        #[arg(long)]
        line_x2: i64,
        #[arg(long, default_value_t = 1)]
        m: i32,
        #[arg(long, default_value_t = 1)]
        min_sep: i32,
        #[arg(long, default_value_t = 3)]
        max_vsep: i32,
        /// Write the blocker overlay picture here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Emit the flipped-L tileset for a given arm length.
    GenTn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounded terminal-shape equivalence between a simulator and a target.
    CheckShapes {
        simulator: PathBuf,
        target: PathBuf,
        repr: PathBuf,
        /// Where to write a counterexample, if found.
        #[arg(long, default_value = "taslab-counterexample.txt")]
        artifact: PathBuf,
    },
    /// Bounded production equivalence (three clauses).
    CheckProd {
        simulator: PathBuf,
        target: PathBuf,
        repr: PathBuf,
        #[arg(long, default_value = "taslab-counterexample.txt")]
        artifact: PathBuf,
    },
    /// Apply the halting-tile modification to a tileset.
    ReduceTm {
        tileset: PathBuf,
        #[arg(long)]
        halt: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the bounded-rectangle simulation clauses on a grown assembly.
    CheckRect {
        tileset: PathBuf,
        #[arg(long)]
        halt: String,
        #[arg(long)]
        bm: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: Option<u64>,
    },
    /// Render an assembly, and optionally a path with its visibility rays.
    Render {
        tileset: PathBuf,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        path: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 16)]
        scale: i64,
    },
    /// Probe the maximum Manhattan distance of depth-bounded terminal tiles.
    Radius {
        tileset: PathBuf,
    },
}

fn load_tas(path: &PathBuf) -> Result<Tas, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    io::parse_tas(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_point(s: &str) -> Result<Point, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected x,y, got {s:?}"));
    }
    let x = parts[0].trim().parse().map_err(|_| format!("bad x in {s:?}"))?;
    let y = parts[1].trim().parse().map_err(|_| format!("bad y in {s:?}"))?;
    Ok(Point::new(x, y))
}

fn write_out(path: &PathBuf, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cap_code(e: &BlockError) -> u8 {
    match e {
        BlockError::CapExceeded(_) => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

pub fn run(cli: Cli) -> u8 {
    match run_inner(cli) {
        Ok(code) => code,
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

fn run_inner(cli: Cli) -> Result<u8, (String, u8)> {
    let usage = |msg: String| (msg, EXIT_USAGE);
    match cli.cmd {
        Cmd::Simulate { tileset, steps, svg } => {
            let tas = load_tas(&tileset).map_err(usage)?;
            let seq = tas.grow(tas.seed(), steps, cli.rng_seed);
            let asm = seq.final_assembly();
            print!("{}", io::serialize_assembly(&asm, &tas));
            eprintln!("grew {} tiles; terminal: {}", seq.len(), tas.is_terminal(&asm));
            if let Some(out) = svg {
                write_out(&out, &crate::render::assembly_picture(&tas, &asm, 16)).map_err(usage)?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Paths { tileset, steps, target } => {
            let tas = load_tas(&tileset).map_err(usage)?;
            let asm = tas.grow(tas.seed(), steps, cli.rng_seed).final_assembly();
            let target = parse_point(&target).map_err(usage)?;
            let p = tas.extract_path(&asm, target).map_err(|e| usage(e.to_string()))?;
            print!("{}", io::serialize_path(&p, &tas));
            Ok(EXIT_OK)
        }
        Cmd::Visibility { tileset, path, svg } => {
            let tas = load_tas(&tileset).map_err(usage)?;
            let text = fs::read_to_string(&path).map_err(|e| usage(e.to_string()))?;
            let p = io::parse_path(&text, &tas).map_err(|e| usage(e.to_string()))?;
            let vis = visible_glues(&tas, &p);
            for vg in &vis.all {
                println!(
                    "glue {} ({}) at {} dir {} {:?}",
                    vg.glue.index,
                    vg.glue.label,
                    vg.ray_origin(),
                    vg.glue.direction().short(),
                    vg.orientation
                );
            }
            eprintln!("{} visible ({} plus, {} minus)", vis.all.len(), vis.plus.len(), vis.minus.len());
            if let Some(out) = svg {
                let mut spec = RenderSpec::new(16);
                spec.push(Layer::PathLine { path: p.clone(), role: "path".into() });
                spec.push(Layer::Rays(vis.all.iter().map(|v| v.ray_origin()).collect()));
                write_out(&out, &render_svg(&spec)).map_err(usage)?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Pump { tileset, path, i, j, length } => {
            let tas = load_tas(&tileset).map_err(usage)?;
            let text = fs::read_to_string(&path).map_err(|e| usage(e.to_string()))?;
            let p = io::parse_path(&text, &tas).map_err(|e| usage(e.to_string()))?;
            let spec = PumpSpec::new(i, j);
            if let Some(len) = length {
                for t in pumping_sequence(&p, spec, len) {
                    println!("{} {} {}", t.pos.x, t.pos.y, tas.tile(t.ty).name);
                }
                return Ok(EXIT_OK);
            }
            match is_pumpable(&tas, &p, spec).map_err(|e| usage(e.to_string()))? {
                PumpVerdict::Pumpable { witness_horizon } => {
                    println!("pumpable (checked to element {witness_horizon})");
                    Ok(EXIT_OK)
                }
                PumpVerdict::Blocked { first_conflict_index } => {
                    println!("blocked at element {first_conflict_index}");
                    Ok(EXIT_FOUND)
                }
            }
        }
        Cmd::Block { tileset, h, zone, line_x2, m, min_sep, max_vsep, svg } => {
            let tas = load_tas(&tileset).map_err(usage)?;
            let nums: Vec<i32> = zone
                .split(',')
                .map(|w| w.trim().parse::<i32>())
                .collect::<Result<_, _>>()
                .map_err(|_| usage(format!("bad zone {zone:?}")))?;
            if nums.len() != 4 {
                return Err(usage("zone needs x0,y0,x1,y1".into()));
            }
            let cfg = BlockConfig {
                h,
                zone: Zone::rect(nums[0], nums[1], nums[2], nums[3]),
                line: VLine::at_half(line_x2),
                m,
                min_sep,
                max_vsep,
            };
            let outcome = block_all(&tas, &cfg, cli.cap).map_err(|e| (e.to_string(), cap_code(&e)))?;
            match outcome {
                BlockAllOutcome::EscapesZone(w) => {
                    println!("escape witness:");
                    print!("{}", io::serialize_path(&w, &tas));
                    Ok(EXIT_FOUND)
                }
                BlockAllOutcome::AllBlocked(state) => {
                    println!("blocked {} h-successful paths", state.records.len());
                    for rec in &state.records {
                        let eb = match &rec.report.outcome {
                            PumpOrEnclose::Encloses(eb) => eb,
                            PumpOrEnclose::EscapesZone(_) => unreachable!(),
                        };
                        println!(
                            "  path len {} -> branch at {} ({:?}, {:?}), grew {} tiles",
                            rec.path.len(),
                            eb.k,
                            eb.kind,
                            rec.report.leaf,
                            rec.grown.len()
                        );
                    }
                    print!("{}", io::serialize_assembly(&state.alpha, &tas));
                    if let Some(out) = svg {
                        let mut spec = RenderSpec::new(16);
                        spec.push(Layer::ZoneShade(cfg.zone.clone()));
                        spec.push(Layer::Assembly {
                            asm: state.alpha.clone(),
                            seed: tas.seed().clone(),
                        });
                        for rec in &state.records {
                            spec.push(Layer::PathLine { path: rec.path.clone(), role: "path".into() });
                            spec.push(Layer::PathLine { path: rec.grown.clone(), role: "branch".into() });
                            let vis = visible_glues(&tas, &rec.path);
                            spec.push(Layer::Rays(vis.all.iter().map(|v| v.ray_origin()).collect()));
                        }
                        spec.push(Layer::VerticalLine(cfg.line));
                        spec.push(Layer::HeightLine(cfg.h));
                        write_out(&out, &render_svg(&spec)).map_err(usage)?;
                    }
                    Ok(EXIT_OK)
                }
            }
        }
        Cmd::GenTn { n, out } => {
            let text = io::serialize_tas(&gen_tn(n));
            match out {
                Some(path) => write_out(&path, &text).map_err(usage)?,
                None => print!("{text}"),
            }
            Ok(EXIT_OK)
        }
        Cmd::CheckShapes { simulator, target, repr, artifact } => {
            let s = load_tas(&simulator).map_err(usage)?;
            let t = load_tas(&target).map_err(usage)?;
            let rt = fs::read_to_string(&repr).map_err(|e| usage(e.to_string()))?;
            let r = io::parse_repr(&rt, &s, &t).map_err(|e| usage(e.to_string()))?;
            let v = equiv_terminal_shapes_bounded(&s, &t, &r, cli.max_depth, cli.cap)
                .map_err(|e| (e.to_string(), EXIT_CAP))?;
            report_equiv(v, &s, &t, cli.max_depth, &artifact).map_err(usage)
        }
        Cmd::CheckProd { simulator, target, repr, artifact } => {
            let s = load_tas(&simulator).map_err(usage)?;
            let t = load_tas(&target).map_err(usage)?;
            let rt = fs::read_to_string(&repr).map_err(|e| usage(e.to_string()))?;
            let r = io::parse_repr(&rt, &s, &t).map_err(|e| usage(e.to_string()))?;
            let v = equiv_productions_bounded(&s, &t, &r, cli.max_depth, cli.cap)
                .map_err(|e| (e.to_string(), EXIT_CAP))?;
            report_equiv(v, &s, &t, cli.max_depth, &artifact).map_err(usage)
        }
        Cmd::ReduceTm { tileset, halt, out } => {
            let tas = load_tas(&tileset).map_err(usage)?;
            let id = tas
                .tile_id_by_name(&halt)
                .ok_or_else(|| usage(format!("unknown tile {halt:?}")))?;
            match modify_tileset_for_reduction(&tas, id) {
                Ok((modified, premise)) => {
                    eprintln!("halt-tile premise: {premise:?}");
                    let text = io::serialize_tas(&modified);
                    match out {
                        Some(path) => write_out(&path, &text).map_err(usage)?,
                        None => print!("{text}"),
                    }
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(EXIT_FOUND)
                }
            }
        }
        Cmd::CheckRect { tileset, halt, bm, t, n, s } => {
            let tas = load_tas(&tileset).map_err(usage)?;
            let id = tas
                .tile_id_by_name(&halt)
                .ok_or_else(|| usage(format!("unknown tile {halt:?}")))?;
            let rb = RectBound::new(bm, t, s.unwrap_or(bm), n, id).map_err(|e| usage(e.to_string()))?;
            let (asm, terminal) = tas.grow_to_terminal(cli.max_depth, cli.rng_seed);
            if !terminal {
                eprintln!("note: depth-bounded terminal approximation at {} steps", cli.max_depth);
            }
            match check_rect_conditions(&tas, &asm, &rb) {
                RectVerdict::OkAccept => {
                    println!("ok: accept");
                    Ok(EXIT_OK)
                }
                RectVerdict::OkReject => {
                    println!("ok: reject");
                    Ok(EXIT_OK)
                }
                RectVerdict::Violation(msg) => {
                    println!("violation: {msg}");
                    Ok(EXIT_FOUND)
                }
            }
        }
        Cmd::Render { tileset, steps, path, out, scale } => {
            let tas = load_tas(&tileset).map_err(usage)?;
            let asm = tas.grow(tas.seed(), steps, cli.rng_seed).final_assembly();
            let mut spec = RenderSpec::new(scale);
            spec.push(Layer::Assembly { asm, seed: tas.seed().clone() });
            if let Some(pp) = path {
                let text = fs::read_to_string(&pp).map_err(|e| usage(e.to_string()))?;
                let p = io::parse_path(&text, &tas).map_err(|e| usage(e.to_string()))?;
                let vis = visible_glues(&tas, &p);
                spec.push(Layer::PathLine { path: p, role: "path".into() });
                spec.push(Layer::Rays(vis.all.iter().map(|v| v.ray_origin()).collect()));
            }
            write_out(&out, &render_svg(&spec)).map_err(usage)?;
            Ok(EXIT_OK)
        }
        Cmd::Radius { tileset } => {
            let tas = load_tas(&tileset).map_err(usage)?;
            let r = manhattan_radius(&tas, cli.max_depth, cli.cap)
                .map_err(|e| (e.to_string(), cap_code(&e)))?;
            println!(
                "radius {} at depth {}{}",
                r.radius,
                cli.max_depth,
                if r.truncated { " (truncated: system still growing)" } else { "" }
            );
            Ok(EXIT_OK)
        }
    }
}

fn report_equiv(
    v: EquivVerdict,
    simulator: &Tas,
    target: &Tas,
    depth: usize,
    artifact: &PathBuf,
) -> Result<u8, String> {
    match v {
        EquivVerdict::Pass { depth } => {
            println!("pass (bounded, depth {depth})");
            Ok(EXIT_OK)
        }
        EquivVerdict::Counterexample(ce) => {
            use crate::sim::Counterexample as C;
            // simulator-side witnesses carry simulator tiles, target-side
            // witnesses carry target tiles
            let (what, asm, tas) = match &ce {
                C::UncleanMapping(a) => ("assembly does not map cleanly", a, simulator),
                C::ImageNotProduced(a) => ("image is not produced by the target", a, simulator),
                C::MissingProduction(a) => ("target production has no preimage", a, target),
                C::ImageNotTerminal(a) => ("image is not bounded-terminal in the target", a, simulator),
                C::MissingTerminal(a) => ("target bounded-terminal has no preimage", a, target),
                C::ShapeMismatch(a) => ("terminal shape image mismatch", a, simulator),
                C::MissingShape(a) => ("target terminal shape never produced", a, target),
            };
            println!("counterexample (depth {depth}): {what}");
            let body = io::serialize_assembly(asm, tas);
            fs::write(artifact, format!("# {what}\n{body}")).map_err(|e| e.to_string())?;
            println!("written to {}", artifact.display());
            Ok(EXIT_FOUND)
        }
    }
}
