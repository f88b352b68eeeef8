//! Minimal deterministic SVG output: layered polylines and cusp markers in
//! a fixed 800x800 viewport, auto-scaled with a 5% margin. No external
//! assets; the only run-dependent line is the version comment.

use crate::geom::Vec2;

pub const VIEWPORT: f64 = 800.0;
pub const MARGIN_FRAC: f64 = 0.05;

pub struct Layer {
    pub points: Vec<Vec2>,
    pub closed: bool,
    pub stroke: &'static str,
    pub width: f64,
    /// Draw crosses at the points instead of a path.
    pub crosses: bool,
}

impl Layer {
    pub fn path(points: Vec<Vec2>, closed: bool, stroke: &'static str) -> Layer {
        Layer {
            points,
            closed,
            stroke,
            width: 1.5,
            crosses: false,
        }
    }

    pub fn crosses(points: Vec<Vec2>, stroke: &'static str) -> Layer {
        Layer {
            points,
            closed: false,
            stroke,
            width: 1.5,
            crosses: true,
        }
    }
}

pub struct SvgPlot {
    layers: Vec<Layer>,
}

impl SvgPlot {
    pub fn new() -> SvgPlot {
        SvgPlot { layers: Vec::new() }
    }

    pub fn add(&mut self, layer: Layer) -> &mut Self {
        self.layers.push(layer);
        self
    }

    pub fn render(&self) -> String {
        let mut min = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut max = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for layer in &self.layers {
            for p in &layer.points {
                if !p.x.is_finite() || !p.y.is_finite() {
                    continue;
                }
                min.x = min.x.min(p.x);
                min.y = min.y.min(p.y);
                max.x = max.x.max(p.x);
                max.y = max.y.max(p.y);
            }
        }
        if !min.x.is_finite() {
            min = Vec2::new(-1.0, -1.0);
            max = Vec2::new(1.0, 1.0);
        }
        let span = (max.x - min.x).max(max.y - min.y).max(1e-9);
        let usable = VIEWPORT * (1.0 - 2.0 * MARGIN_FRAC);
        let scale = usable / span;
        let center = 0.5 * (min + max);
        let to_px = |p: Vec2| -> (f64, f64) {
            (
                VIEWPORT / 2.0 + (p.x - center.x) * scale,
                VIEWPORT / 2.0 - (p.y - center.y) * scale,
            )
        };

        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{v}\" height=\"{v}\" viewBox=\"0 0 {v} {v}\">\n",
            v = VIEWPORT as i64
        ));
        out.push_str(&format!(
            "<!-- minkcurve {} -->\n",
            env!("CARGO_PKG_VERSION")
        ));
        out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
        for layer in &self.layers {
            if layer.crosses {
                for p in &layer.points {
                    if !p.x.is_finite() || !p.y.is_finite() {
                        continue;
                    }
                    let (x, y) = to_px(*p);
                    let r = 6.0;
                    out.push_str(&format!(
                        "<path d=\"M {:.3} {:.3} L {:.3} {:.3} M {:.3} {:.3} L {:.3} {:.3}\" stroke=\"{}\" stroke-width=\"{}\" fill=\"none\"/>\n",
                        x - r, y - r, x + r, y + r, x - r, y + r, x + r, y - r,
                        layer.stroke, layer.width
                    ));
                }
            } else {
                let mut d = String::new();
                let mut first = true;
                for p in &layer.points {
                    if !p.x.is_finite() || !p.y.is_finite() {
                        continue;
                    }
                    let (x, y) = to_px(*p);
                    if first {
                        d.push_str(&format!("M {x:.3} {y:.3}"));
                        first = false;
                    } else {
                        d.push_str(&format!(" L {x:.3} {y:.3}"));
                    }
                }
                if layer.closed {
                    d.push_str(" Z");
                }
                out.push_str(&format!(
                    "<path d=\"{}\" stroke=\"{}\" stroke-width=\"{}\" fill=\"none\"/>\n",
                    d, layer.stroke, layer.width
                ));
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

impl Default for SvgPlot {
    fn default() -> Self {
        Self::new()
    }
}
