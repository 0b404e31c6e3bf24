//! Standalone SVG drawings of a scene and a graph.

use std::fmt::Write;

use crate::cones::{Side, SubconeRef};
use crate::graph::Graph;
use crate::scene::Scene;

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Canvas width in pixels; the height follows the aspect ratio.
    pub width: f64,
    /// Vertices of a path to draw on top, e.g. a canonical path.
    pub highlight_path: Vec<usize>,
    /// A subcone to shade, e.g. the one a charge lands in.
    pub highlight_cone: Option<SubconeRef>,
    /// Bend edges that run along an obstacle boundary so they stay visible.
    pub offset_boundary_edges: bool,
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 600.0,
            highlight_path: Vec::new(),
            highlight_cone: None,
            offset_boundary_edges: false,
            labels: false,
        }
    }
}

const MARGIN: f64 = 20.0;

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn new(scene: &Scene, width: f64) -> Frame {
        let pts: Vec<(f64, f64)> = scene.vertices().iter().map(|p| p.to_f64()).collect();
        if pts.is_empty() {
            return Frame { min_x: 0.0, max_y: 0.0, scale: 1.0, width, height: width };
        }
        let fold = |f: fn(f64, f64) -> f64, init: f64, sel: fn(&(f64, f64)) -> f64| {
            pts.iter().map(sel).fold(init, f)
        };
        let min_x = fold(f64::min, f64::INFINITY, |p| p.0);
        let max_x = fold(f64::max, f64::NEG_INFINITY, |p| p.0);
        let min_y = fold(f64::min, f64::INFINITY, |p| p.1);
        let max_y = fold(f64::max, f64::NEG_INFINITY, |p| p.1);
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        let inner = (width - 2.0 * MARGIN).max(1.0);
        let scale = inner / span_x.max(span_y);
        Frame {
            min_x,
            max_y,
            scale,
            width,
            height: span_y * scale + 2.0 * MARGIN,
        }
    }

    /// Scene to canvas; the y axis points down in SVG.
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            MARGIN + (x - self.min_x) * self.scale,
            MARGIN + (self.max_y - y) * self.scale,
        )
    }
}

fn direction(deg: f64) -> (f64, f64) {
    let r = deg.to_radians();
    (r.cos(), r.sin())
}

fn angle_of(d: (f64, f64)) -> f64 {
    d.1.atan2(d.0).to_degrees().rem_euclid(360.0)
}

/// Boundary angles of a subcone, counterclockwise from the first.
fn cone_angles(scene: &Scene, cone: SubconeRef) -> (f64, f64) {
    let lo = 60.0 + 60.0 * cone.label.position() as f64;
    let hi = lo + 60.0;
    let corner_dir = |w: usize| {
        let a = scene.point(cone.apex).to_f64();
        let b = scene.point(w).to_f64();
        angle_of((b.0 - a.0, b.1 - a.1))
    };
    // unwrap the corner angle into [lo, lo + 360)
    let near = |t: f64| lo + (t - lo).rem_euclid(360.0);
    match (cone.side, scene.corner(cone.apex)) {
        (Side::Left, Some(c)) => (near(corner_dir(c.prev)), hi),
        (Side::Right, Some(c)) => (lo, near(corner_dir(c.next))),
        _ => (lo, hi),
    }
}

pub fn render_svg(scene: &Scene, g: &Graph, options: &RenderOptions) -> String {
    let frame = Frame::new(scene, options.width);
    let pt = |v: usize| frame.map(scene.point(v).to_f64());
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"#,
        w = frame.width,
        h = frame.height
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    if let Some(cone) = options.highlight_cone {
        let (a0, a1) = cone_angles(scene, cone);
        let reach = frame.width.max(frame.height) * 2.0;
        let (ax, ay) = pt(cone.apex);
        let ray = |deg: f64| {
            let (dx, dy) = direction(deg);
            (ax + dx * reach, ay - dy * reach)
        };
        let (p0, p1) = (ray(a0), ray(a1));
        let _ = writeln!(
            out,
            r#"<path class="cone" d="M {ax:.2} {ay:.2} L {:.2} {:.2} L {:.2} {:.2} Z" fill="gold" fill-opacity="0.3" stroke="none"/>"#,
            p0.0, p0.1, p1.0, p1.1
        );
    }

    for poly in scene.polygons() {
        let pts: Vec<String> = poly
            .iter()
            .map(|p| {
                let (x, y) = frame.map(p.to_f64());
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polygon points="{}" fill="lightgray" stroke="gray"/>"#,
            pts.join(" ")
        );
    }

    let boundary: std::collections::HashSet<(usize, usize)> = scene
        .boundary_edges()
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    for (u, v) in g.edges() {
        let ((x1, y1), (x2, y2)) = (pt(u), pt(v));
        if options.offset_boundary_edges && boundary.contains(&(u, v)) {
            // bow to the left of u -> v by a tenth of its length
            let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
            let (cx, cy) = (mx + (y2 - y1) * 0.1, my - (x2 - x1) * 0.1);
            let _ = writeln!(
                out,
                r#"<path class="edge" d="M {x1:.2} {y1:.2} Q {cx:.2} {cy:.2} {x2:.2} {y2:.2}" fill="none" stroke="black"/>"#
            );
        } else {
            let _ = writeln!(
                out,
                r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black"/>"#
            );
        }
    }

    if options.highlight_path.len() >= 2 {
        let pts: Vec<String> = options
            .highlight_path
            .iter()
            .map(|&v| {
                let (x, y) = pt(v);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="crimson" stroke-width="3"/>"#,
            pts.join(" ")
        );
    }

    for v in 0..scene.len() {
        let (x, y) = pt(v);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
        if options.labels {
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="10">{v}</text>"#,
                x + 4.0,
                y - 4.0
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
