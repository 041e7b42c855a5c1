//! Deterministic SVG rendering of assemblies, paths, curves, visibility rays,
//! zones and the reference lines.
//!
//! Output is byte-identical across runs for identical inputs: all iteration
//! is over ordered collections and coordinates are kept integral by requiring
//! the scale to be a multiple of four (one unit per quarter coordinate).

use std::collections::BTreeMap;

use crate::blocking::Zone;
use crate::geom::{PolyCurve, QPoint};
use crate::model::{Assembly, Point, Tas};
use crate::path::Path;
use crate::visibility::VLine;

/// Colors by layer role, with sensible defaults.
#[derive(Debug, Clone)]
pub struct Palette {
    colors: BTreeMap<String, String>,
}

impl Default for Palette {
    fn default() -> Self {
        let mut colors = BTreeMap::new();
        for (k, v) in [
            ("assembly", "#d0d0d0"),
            ("assembly-stroke", "#404040"),
            ("seed", "#707070"),
            ("path", "#1f4e9c"),
            ("branch", "#c03020"),
            ("curve", "#208020"),
            ("ray", "#d02020"),
            ("zone", "#efe6c8"),
            ("line", "#8030a0"),
            ("height", "#303030"),
            ("label", "#000000"),
        ] {
            colors.insert(k.to_owned(), v.to_owned());
        }
        Palette { colors }
    }
}

impl Palette {
    pub fn set(&mut self, role: &str, color: &str) {
        self.colors.insert(role.to_owned(), color.to_owned());
    }

    fn get(&self, role: &str) -> &str {
        self.colors.get(role).map(|s| s.as_str()).unwrap_or("#000000")
    }
}

/// One drawable layer; layers are painted in order.
#[derive(Debug, Clone)]
pub enum Layer {
    /// Tiles as filled squares; seed positions darker. Names drawn when the
    /// scale leaves room.
    Assembly { asm: Assembly, seed: Assembly },
    /// A path drawn over tile centers.
    PathLine { path: Path, role: String },
    /// An arbitrary quarter-coordinate curve.
    Curve(PolyCurve),
    /// Southward visibility rays from glue midpoints.
    Rays(Vec<QPoint>),
    /// The zone as shaded cells.
    ZoneShade(Zone),
    /// The vertical glue line.
    VerticalLine(VLine),
    /// The horizontal height line.
    HeightLine(i32),
}

/// A full picture: layers, palette and scale (pixels per tile, multiple of 4).
#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub layers: Vec<Layer>,
    pub palette: Palette,
    pub scale: i64,
}

impl RenderSpec {
    pub fn new(scale: i64) -> RenderSpec {
        assert!(scale >= 4 && scale % 4 == 0, "scale must be a positive multiple of 4");
        RenderSpec { layers: Vec::new(), palette: Palette::default(), scale }
    }

    pub fn push(&mut self, layer: Layer) -> &mut Self {
        self.layers.push(layer);
        self
    }

    fn bounds(&self) -> (QPoint, QPoint) {
        let mut qs: Vec<QPoint> = Vec::new();
        for layer in &self.layers {
            match layer {
                Layer::Assembly { asm, .. } => {
                    qs.extend(asm.domain().map(QPoint::from_cell));
                }
                Layer::PathLine { path, .. } => {
                    qs.extend(path.positions().map(QPoint::from_cell));
                }
                Layer::Curve(c) => qs.extend_from_slice(c.vertices()),
                Layer::Rays(origins) => qs.extend_from_slice(origins),
                Layer::ZoneShade(z) => qs.extend(z.cells().map(QPoint::from_cell)),
                Layer::VerticalLine(_) | Layer::HeightLine(_) => {}
            }
        }
        if qs.is_empty() {
            return (QPoint::new(0, 0), QPoint::new(4, 4));
        }
        let min = QPoint::new(
            qs.iter().map(|q| q.qx).min().unwrap() - 4,
            qs.iter().map(|q| q.qy).min().unwrap() - 4,
        );
        let max = QPoint::new(
            qs.iter().map(|q| q.qx).max().unwrap() + 4,
            qs.iter().map(|q| q.qy).max().unwrap() + 4,
        );
        (min, max)
    }
}

/// Renders the spec to SVG text.
pub fn render_svg(spec: &RenderSpec) -> String {
    let (min, max) = spec.bounds();
    let s = spec.scale / 4; // pixels per quarter unit
    let w = (max.qx - min.qx) * s;
    let h = (max.qy - min.qy) * s;
    // world y grows north, svg y grows down
    let tx = |q: QPoint| -> (i64, i64) { ((q.qx - min.qx) * s, (max.qy - q.qy) * s) };
    let pal = &spec.palette;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    ));
    out.push_str(&format!("<rect width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>\n"));
    for layer in &spec.layers {
        match layer {
            Layer::ZoneShade(zone) => {
                for cell in zone.cells() {
                    let (x, y) = tx(QPoint::from_cell(cell).offset(-2, 2));
                    out.push_str(&format!(
                        "<rect x=\"{x}\" y=\"{y}\" width=\"{0}\" height=\"{0}\" fill=\"{1}\"/>\n",
                        spec.scale,
                        pal.get("zone")
                    ));
                }
            }
            Layer::Assembly { asm, seed } => {
                for t in asm.tiles() {
                    let (x, y) = tx(QPoint::from_cell(t.pos).offset(-2, 2));
                    let fill = if seed.contains(t.pos) { pal.get("seed") } else { pal.get("assembly") };
                    out.push_str(&format!(
                        "<rect x=\"{x}\" y=\"{y}\" width=\"{0}\" height=\"{0}\" fill=\"{fill}\" stroke=\"{1}\" stroke-width=\"1\"/>\n",
                        spec.scale,
                        pal.get("assembly-stroke")
                    ));
                }
            }
            Layer::PathLine { path, role } => {
                if path.len() >= 2 {
                    let pts: Vec<String> = path
                        .positions()
                        .map(|p| {
                            let (x, y) = tx(QPoint::from_cell(p));
                            format!("{x},{y}")
                        })
                        .collect();
                    out.push_str(&format!(
                        "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                        pts.join(" "),
                        pal.get(role)
                    ));
                }
                let (sx, sy) = tx(QPoint::from_cell(path.first().pos));
                out.push_str(&format!(
                    "<circle cx=\"{sx}\" cy=\"{sy}\" r=\"3\" fill=\"{}\"/>\n",
                    pal.get(role)
                ));
            }
            Layer::Curve(c) => {
                if c.is_degenerate() {
                    let (x, y) = tx(c.first());
                    out.push_str(&format!(
                        "<circle cx=\"{x}\" cy=\"{y}\" r=\"2\" fill=\"{}\"/>\n",
                        pal.get("curve")
                    ));
                } else {
                    let pts: Vec<String> = c
                        .vertices()
                        .iter()
                        .map(|q| {
                            let (x, y) = tx(*q);
                            format!("{x},{y}")
                        })
                        .collect();
                    out.push_str(&format!(
                        "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1\"/>\n",
                        pts.join(" "),
                        pal.get("curve")
                    ));
                }
            }
            Layer::Rays(origins) => {
                for o in origins {
                    let (x, y) = tx(*o);
                    out.push_str(&format!(
                        "<line x1=\"{x}\" y1=\"{y}\" x2=\"{x}\" y2=\"{h}\" stroke=\"{}\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n",
                        pal.get("ray")
                    ));
                }
            }
            Layer::VerticalLine(line) => {
                let (x, _) = tx(QPoint::new(line.qx(), 0));
                out.push_str(&format!(
                    "<line x1=\"{x}\" y1=\"0\" x2=\"{x}\" y2=\"{h}\" stroke=\"{}\" stroke-width=\"1\"/>\n",
                    pal.get("line")
                ));
            }
            Layer::HeightLine(hy) => {
                let (_, y) = tx(QPoint::from_cell(Point::new(0, *hy)));
                out.push_str(&format!(
                    "<line x1=\"0\" y1=\"{y}\" x2=\"{w}\" y2=\"{y}\" stroke=\"{}\" stroke-width=\"1\" stroke-dasharray=\"7 3\"/>\n",
                    pal.get("height")
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Convenience: an assembly snapshot with its seed highlighted.
pub fn assembly_picture(tas: &Tas, asm: &Assembly, scale: i64) -> String {
    let mut spec = RenderSpec::new(scale);
    spec.push(Layer::Assembly { asm: asm.clone(), seed: tas.seed().clone() });
    render_svg(&spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::gen_tn;
    use crate::visibility::visible_glues;

    #[test]
    fn empty_spec_is_a_valid_document() {
        let spec = RenderSpec::new(16);
        let svg = render_svg(&spec);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let tas = gen_tn(12);
        let asm = tas.grow(tas.seed(), 18, 0).final_assembly();
        let a = assembly_picture(&tas, &asm, 16);
        let b = assembly_picture(&tas, &asm, 16);
        assert_eq!(a, b);
        assert!(a.matches("<rect").count() > 19); // tiles + background
    }

    #[test]
    fn rays_are_drawn_for_visible_glues() {
        let tas = gen_tn(3);
        let asm = tas.grow(tas.seed(), 6, 0).final_assembly();
        let p = tas.extract_path(&asm, crate::model::Point::new(4, 2)).unwrap();
        let vis = visible_glues(&tas, &p);
        let mut spec = RenderSpec::new(16);
        spec.push(Layer::Assembly { asm, seed: tas.seed().clone() });
        spec.push(Layer::PathLine { path: p, role: "path".into() });
        spec.push(Layer::Rays(vis.all.iter().map(|v| v.ray_origin()).collect()));
        let svg = render_svg(&spec);
        assert_eq!(svg.matches("stroke-dasharray=\"4 3\"").count(), vis.all.len());
    }
}
