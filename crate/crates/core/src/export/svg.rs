use std::f64::consts::PI;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::constructor::Configuration;
use crate::error::{Error, Result};
use crate::geometry::{complement, norm, SurfaceCircle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Projection {
    /// Arcs on the unit circle, for 2 ambient dimensions.
    ArcOnCircle,
    /// Boundary curves seen from outside the sphere, for 3 ambient dimensions.
    Orthographic,
}

impl Projection {
    pub fn for_dim(n: usize) -> Result<Self> {
        match n {
            2 => Ok(Projection::ArcOnCircle),
            3 => Ok(Projection::Orthographic),
            _ => Err(Error::UnsupportedProjection(n)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabelPlacement {
    Centroid,
    Legend,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    /// Stroke colours, cycled when there are more circles than entries.
    pub palette: Vec<String>,
    /// Chosen from the dimension when unset.
    pub projection: Option<Projection>,
    pub stroke_width: f64,
    pub labels: LabelPlacement,
    /// Terms whose complement is drawn next to the circle itself.
    pub complemented: Vec<String>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            width: 480,
            height: 480,
            palette: [
                "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
            ]
            .map(String::from)
            .to_vec(),
            projection: None,
            stroke_width: 2.0,
            labels: LabelPlacement::Centroid,
            complemented: Vec::new(),
        }
    }
}

/// A point in view coordinates on the unit sphere; `depth > 0` faces the viewer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ViewPoint {
    pub x: f64,
    pub y: f64,
    pub depth: f64,
}

/// Geometry that ends up in the drawing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Primitive {
    /// The counter-clockwise arc from `start` to `end` (radians, `end > start`).
    Arc {
        name: String,
        complement: bool,
        start: f64,
        end: f64,
    },
    /// A sampled boundary curve together with the disc centre.
    Boundary {
        name: String,
        complement: bool,
        center: ViewPoint,
        points: Vec<ViewPoint>,
    },
}

impl Primitive {
    pub fn name(&self) -> &str {
        match self {
            Primitive::Arc { name, .. } | Primitive::Boundary { name, .. } => name,
        }
    }

    pub fn is_complement(&self) -> bool {
        match self {
            Primitive::Arc { complement, .. } | Primitive::Boundary { complement, .. } => {
                *complement
            }
        }
    }

    fn label(&self) -> String {
        if self.is_complement() {
            format!("c_{}", self.name())
        } else {
            self.name().to_string()
        }
    }
}

const BOUNDARY_SAMPLES: usize = 180;

fn unit(v: &[f64]) -> Vec<f64> {
    let n = norm(v);
    v.iter().map(|x| x / n).collect()
}

fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Some unit vector orthogonal to the unit vector `v`.
fn orthogonal(v: &[f64]) -> Vec<f64> {
    let axis = (0..3)
        .min_by(|&i, &j| v[i].abs().total_cmp(&v[j].abs()))
        .unwrap();
    let mut e = [0.0; 3];
    e[axis] = 1.0;
    unit(&cross(v, &e))
}

struct ViewFrame {
    e1: Vec<f64>,
    e2: Vec<f64>,
    view: Vec<f64>,
}

impl ViewFrame {
    /// Looks along the mean of the circle centres.
    fn new(conf: &Configuration) -> Self {
        let mut mean = vec![0.0; 3];
        for c in conf.circles.values() {
            for (m, x) in mean.iter_mut().zip(c.center.coords()) {
                *m += x;
            }
        }
        let view = if norm(&mean) > 1e-9 * conf.sphere.radius() {
            unit(&mean)
        } else {
            vec![0.0, 0.0, 1.0]
        };
        let e1 = orthogonal(&view);
        let e2 = cross(&view, &e1).to_vec();
        Self { e1, e2, view }
    }

    fn map(&self, p: &[f64]) -> ViewPoint {
        let dot = |a: &[f64]| a.iter().zip(p).map(|(x, y)| x * y).sum::<f64>();
        ViewPoint {
            x: dot(&self.e1),
            y: dot(&self.e2),
            depth: dot(&self.view),
        }
    }
}

fn boundary(
    frame: &ViewFrame,
    c: &SurfaceCircle,
    sphere_radius: f64,
) -> (ViewPoint, Vec<ViewPoint>) {
    let axis = unit(c.center.coords());
    let u = orthogonal(&axis);
    let w = cross(&axis, &u);
    let alpha = c.radius / sphere_radius;
    let points = (0..BOUNDARY_SAMPLES)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / BOUNDARY_SAMPLES as f64;
            let p: Vec<f64> = (0..3)
                .map(|k| alpha.cos() * axis[k] + alpha.sin() * (t.cos() * u[k] + t.sin() * w[k]))
                .collect();
            frame.map(&p)
        })
        .collect();
    (frame.map(&axis), points)
}

fn drawn_circles(conf: &Configuration, spec: &RenderSpec) -> Vec<(String, bool, SurfaceCircle)> {
    let mut out = Vec::new();
    for (name, c) in &conf.circles {
        out.push((name.clone(), false, c.clone()));
        if spec.complemented.contains(name) {
            out.push((name.clone(), true, complement(&conf.sphere, c)));
        }
    }
    out
}

/// The arcs or boundary curves that [`render_svg`] draws.
pub fn primitives(conf: &Configuration, spec: &RenderSpec) -> Result<Vec<Primitive>> {
    let n = conf.dim();
    let projection = Projection::for_dim(n)?;
    if spec.projection.is_some_and(|p| p != projection) {
        return Err(Error::UnsupportedProjection(n));
    }
    let big_r = conf.sphere.radius();
    let circles = drawn_circles(conf, spec);
    Ok(match projection {
        Projection::ArcOnCircle => circles
            .into_iter()
            .map(|(name, complement, c)| {
                let xy = c.center.coords();
                let mid = xy[1].atan2(xy[0]);
                let half = c.radius / big_r;
                Primitive::Arc {
                    name,
                    complement,
                    start: mid - half,
                    end: mid + half,
                }
            })
            .collect(),
        Projection::Orthographic => {
            let frame = ViewFrame::new(conf);
            circles
                .into_iter()
                .map(|(name, complement, c)| {
                    let (center, points) = boundary(&frame, &c, big_r);
                    Primitive::Boundary {
                        name,
                        complement,
                        center,
                        points,
                    }
                })
                .collect()
        }
    })
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn style(spec: &RenderSpec, i: usize, complement: bool, hidden: bool) -> String {
    let hidden = if hidden { r#" opacity="0.6""# } else { "" };
    let colour = if spec.palette.is_empty() {
        "#000000"
    } else {
        &spec.palette[i % spec.palette.len()]
    };
    if complement {
        format!(
            r#"fill="none" stroke="url(#hatch)" stroke-width="{:.3}" stroke-dasharray="6 3" data-stroke="{}"{hidden}"#,
            3.0 * spec.stroke_width,
            escape(colour)
        )
    } else if !hidden.is_empty() {
        format!(
            r#"fill="none" stroke="{}" stroke-width="{:.3}" stroke-dasharray="2 4"{hidden}"#,
            escape(colour),
            spec.stroke_width
        )
    } else {
        format!(
            r#"fill="none" stroke="{}" stroke-width="{:.3}""#,
            escape(colour),
            spec.stroke_width
        )
    }
}

/// SVG 1.1 drawing of a 2- or 3-dimensional configuration.
pub fn render_svg(conf: &Configuration, spec: &RenderSpec) -> Result<String> {
    if spec.width == 0 || spec.height == 0 {
        return Err(Error::InvalidConfig("render size must be positive".into()));
    }
    let prims = primitives(conf, spec)?;
    let (w, h) = (f64::from(spec.width), f64::from(spec.height));
    let (cx, cy) = (w / 2.0, h / 2.0);
    let side = w.min(h);
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        spec.width, spec.height, spec.width, spec.height
    );
    let _ = writeln!(
        svg,
        r##"<defs><pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" patternTransform="rotate(45)"><line x1="0" y1="0" x2="0" y2="6" stroke="#555555" stroke-width="2"/></pattern></defs>"##
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let mut labels: Vec<(String, f64, f64)> = Vec::new();
    if conf.dim() == 2 {
        let base = 0.3 * side;
        let gap = (0.15 * side / prims.len().max(1) as f64).min(0.05 * side);
        let _ = writeln!(
            svg,
            r##"<circle cx="{cx:.3}" cy="{cy:.3}" r="{base:.3}" fill="none" stroke="#999999" stroke-width="1"/>"##
        );
        for (i, p) in prims.iter().enumerate() {
            let Primitive::Arc { start, end, .. } = p else {
                continue;
            };
            let ring = base + (i + 1) as f64 * gap;
            let at = |t: f64| (cx + ring * t.cos(), cy - ring * t.sin());
            let (x0, y0) = at(*start);
            let (x1, y1) = at(*end);
            let large = u8::from(end - start > PI);
            let _ = writeln!(
                svg,
                r#"<path d="M {x0:.3} {y0:.3} A {ring:.3} {ring:.3} 0 {large} 0 {x1:.3} {y1:.3}" {}/>"#,
                style(spec, i, p.is_complement(), false)
            );
            let mid = (start + end) / 2.0;
            labels.push((
                p.label(),
                cx + (ring + 12.0) * mid.cos(),
                cy - (ring + 12.0) * mid.sin(),
            ));
        }
    } else {
        let scale = 0.42 * side;
        let _ = writeln!(
            svg,
            r##"<circle cx="{cx:.3}" cy="{cy:.3}" r="{scale:.3}" fill="none" stroke="#999999" stroke-width="1"/>"##
        );
        let screen = |v: &ViewPoint| (cx + scale * v.x, cy - scale * v.y);
        for (i, p) in prims.iter().enumerate() {
            let Primitive::Boundary { center, points, .. } = p else {
                continue;
            };
            // Split the closed curve into front and back runs.
            let m = points.len();
            let first_flip = (0..m)
                .find(|&k| (points[k].depth >= 0.0) != (points[(k + m - 1) % m].depth >= 0.0));
            let start = first_flip.unwrap_or(0);
            let mut runs: Vec<(bool, Vec<(f64, f64)>)> = Vec::new();
            for k in 0..=m {
                let v = &points[(start + k) % m];
                let front = v.depth >= 0.0;
                match runs.last_mut() {
                    Some((f, run)) if *f == front => run.push(screen(v)),
                    Some((_, run)) => {
                        // Share the switching vertex so the curve stays connected.
                        run.push(screen(v));
                        runs.push((front, vec![screen(v)]));
                    }
                    None => runs.push((front, vec![screen(v)])),
                }
            }
            for (front, run) in runs {
                let mut d = String::new();
                for (k, (x, y)) in run.iter().enumerate() {
                    let _ = write!(d, "{}{x:.3} {y:.3}", if k == 0 { "M " } else { " L " });
                }
                let _ = writeln!(
                    svg,
                    r#"<path d="{d}" {}/>"#,
                    style(spec, i, p.is_complement(), !front)
                );
            }
            let (lx, ly) = screen(center);
            labels.push((p.label(), lx, ly));
        }
    }

    match spec.labels {
        LabelPlacement::Centroid => {
            for (text, x, y) in &labels {
                let _ = writeln!(
                    svg,
                    r#"<text x="{x:.3}" y="{y:.3}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
                    escape(text)
                );
            }
        }
        LabelPlacement::Legend => {
            for (i, (text, _, _)) in labels.iter().enumerate() {
                let y = 16.0 + 16.0 * i as f64;
                let colour = spec
                    .palette
                    .get(i % spec.palette.len().max(1))
                    .map_or("#000000", |s| s);
                let _ = writeln!(
                    svg,
                    r#"<rect x="8" y="{:.3}" width="10" height="10" fill="{}"/><text x="24" y="{y:.3}" font-family="sans-serif" font-size="12">{}</text>"#,
                    y - 9.0,
                    escape(colour),
                    escape(text)
                );
            }
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
