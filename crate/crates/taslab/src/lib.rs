//! An exact laboratory for temperature-1 (noncooperative) tile self-assembly.
//!
//! The crate models square tiles with glued sides attaching asynchronously to a
//! seeded assembly, where a single matching glue of strength 1 suffices to bind.
//! On top of the growth model it provides:
//!
//! - paths of tiles as first-class objects, with exact pumping machinery
//!   ([`path`]),
//! - exact rectilinear geometry over quarter-integer coordinates: canonical and
//!   nano embeddings, Jordan-component tests ([`geom`]),
//! - glue visibility from the south and the `V+`/`V-` calculus ([`visibility`]),
//! - the pump-or-enclose decision procedure, the path order, and the iterative
//!   all-paths blocker ([`blocking`]),
//! - m-block representation functions and bounded simulation-equivalence
//!   checks, plus the flipped-L family of systems ([`sim`]),
//! - the halting-tile reduction gadget and rectangle-bound checker
//!   ([`reduction`]),
//! - text formats and SVG rendering ([`io`], [`render`]).
//!
//! Every operation is deterministic given its inputs; randomized growth takes
//! an explicit RNG seed. See the `examples/` directory for one runnable demo
//! per capability, and the `taslab` binary for a scriptable CLI.

pub mod blocking;
pub mod geom;
pub mod io;
pub mod model;
pub mod path;
pub mod reduction;
pub mod render;
pub mod sim;
pub mod visibility;

pub mod cli;

pub use model::{Assembly, AssemblySequence, Dir, Glue, Point, Tas, Tile, TileId, TileType, Vec2};
pub use path::{Path, PathGlue, PumpSpec, PumpVerdict};
