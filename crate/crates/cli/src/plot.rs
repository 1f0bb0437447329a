use std::fmt::Write as _;
use std::path::Path;

use anyhow::Result;
use serde::{Deserialize, Serialize};

use eislag::approx::{eisenstein_pairs, RayTarget};
use eislag::par::Exec;
use eislag::romik::point_of_stream;

use crate::commands::parse_stream;
use crate::output::{csv_bytes, write_atomic, Report};

const SIDE: f64 = 600.0;
const PAD: f64 = 24.0;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlotReport {
    pub target: String,
    pub max_norm: u64,
    pub points: usize,
    pub svg: String,
    pub csv: String,
}

impl Report for PlotReport {
    fn text(&self) -> String {
        format!("{} points for {} written to {} and {}", self.points, self.target, self.svg, self.csv)
    }
    fn csv_header(&self) -> Vec<&'static str> {
        vec!["target", "max_norm", "points", "svg", "csv"]
    }
    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.target.clone(),
            self.max_norm.to_string(),
            self.points.to_string(),
            self.svg.clone(),
            self.csv.clone(),
        ]]
    }
}

/// Plane coordinates of `a + bω`.
fn complex(a: f64, b: f64) -> (f64, f64) {
    (a - b / 2.0, b * 3f64.sqrt() / 2.0)
}

struct Canvas {
    r: f64,
    scale: f64,
}

impl Canvas {
    fn new(max_norm: u64) -> Self {
        let r = max_norm as f64;
        Canvas { r, scale: SIDE / (1.5 * r) }
    }

    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let top = self.r * 3f64.sqrt() / 2.0;
        (PAD + (x + self.r / 2.0) * self.scale, PAD + (top - y) * self.scale)
    }

    fn width(&self) -> f64 {
        2.0 * PAD + 1.5 * self.r * self.scale
    }

    fn height(&self) -> f64 {
        2.0 * PAD + self.r * 3f64.sqrt() / 2.0 * self.scale
    }
}

pub fn svg_document(z: &RayTarget, pairs: &[[u64; 3]], max_norm: u64) -> String {
    let cv = Canvas::new(max_norm);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.0}" height="{:.0}" viewBox="0 0 {:.3} {:.3}">"#,
        cv.width().ceil(),
        cv.height().ceil(),
        cv.width(),
        cv.height()
    );
    let (ox, oy) = cv.px((0.0, 0.0));
    for end in [(cv.r, 0.0), complex(0.0, cv.r)] {
        let (x, y) = cv.px(end);
        let _ = writeln!(
            s,
            r##"<line class="axis" x1="{ox:.3}" y1="{oy:.3}" x2="{x:.3}" y2="{y:.3}" stroke="#bbbbbb" stroke-width="1"/>"##
        );
    }
    let (ax, ay) = cv.px((1.0, 0.0));
    let (bx, by) = cv.px(complex(0.0, 1.0));
    let _ = writeln!(
        s,
        r##"<path class="arc" d="M {ax:.3} {ay:.3} A {r:.3} {r:.3} 0 0 0 {bx:.3} {by:.3}" fill="none" stroke="#2060c0" stroke-width="1.5"/>"##,
        r = cv.scale
    );
    let (zx, zy) = z.complex();
    let (rx, ry) = cv.px((zx * cv.r, zy * cv.r));
    let _ = writeln!(
        s,
        r##"<line class="ray" x1="{ox:.3}" y1="{oy:.3}" x2="{rx:.3}" y2="{ry:.3}" stroke="#c03020" stroke-width="1.5"/>"##
    );
    let radius = (cv.scale * 0.12).clamp(1.0, 4.0);
    for &[a, b, _] in pairs {
        let (x, y) = cv.px(complex(a as f64, b as f64));
        let _ = writeln!(
            s,
            r#"<circle class="pair" cx="{x:.3}" cy="{y:.3}" r="{radius:.2}"><title>{a}+{b}ω</title></circle>"#
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn csv_document(pairs: &[[u64; 3]]) -> Result<Vec<u8>> {
    let rows: Vec<Vec<String>> = pairs
        .iter()
        .map(|&[a, b, n]| {
            let (x, y) = complex(a as f64, b as f64);
            vec![a.to_string(), b.to_string(), n.to_string(), format!("{x:.6}"), format!("{y:.6}")]
        })
        .collect();
    csv_bytes(&["a", "b", "norm", "x", "y"], &rows)
}

pub fn plot(target: &str, max_norm: u64, svg_path: &Path, exec: Exec) -> Result<PlotReport> {
    let s = parse_stream(target)?;
    let z = RayTarget::from_point(&point_of_stream(&s)?);
    let pairs = eisenstein_pairs(max_norm, exec);
    let csv_path = svg_path.with_extension("csv");
    write_atomic(svg_path, svg_document(&z, &pairs, max_norm).as_bytes())?;
    write_atomic(&csv_path, &csv_document(&pairs)?)?;
    Ok(PlotReport {
        target: s.to_string(),
        max_norm,
        points: pairs.len(),
        svg: svg_path.display().to_string(),
        csv: csv_path.display().to_string(),
    })
}
