//! Deterministic SVG rendering of a diagram document.
//!
//! Each point gets a short tick pointing to the side its decorations put it
//! on: left for `p⁻`, right for `p⁺`, down for `q⁻`, up for `q⁺`. Infinite
//! coordinates are drawn in gutters outside the finite plot area.

use std::fmt::Write as _;

use parahom::diagrams::Decoration;

use crate::document::{format_real, DiagramDocument};

const SIZE: f64 = 400.0;
const MARGIN: f64 = 50.0;
const GUTTER: f64 = 24.0;
const TICK: f64 = 9.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

fn color(dim: usize) -> &'static str {
    COLORS[dim % COLORS.len()]
}

struct Frame {
    lo: f64,
    hi: f64,
}

impl Frame {
    fn new(doc: &DiagramDocument) -> Self {
        let finite: Vec<f64> = doc
            .entries()
            .iter()
            .flat_map(|e| [e.birth, e.death])
            .filter(|v| v.is_finite())
            .collect();
        let (mut lo, mut hi) = finite
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
        if finite.is_empty() {
            (lo, hi) = (0.0, 1.0);
        }
        let pad = ((hi - lo) * 0.1).max(0.5);
        Self { lo: lo - pad, hi: hi + pad }
    }

    /// Plot x of a birth; `-∞` sits in the left gutter.
    fn x(&self, v: f64) -> f64 {
        if v == f64::NEG_INFINITY {
            MARGIN - GUTTER / 2.0
        } else {
            MARGIN + GUTTER + (v - self.lo) / (self.hi - self.lo) * SIZE
        }
    }

    /// Plot y of a death; `+∞` sits in the top gutter.
    fn y(&self, v: f64) -> f64 {
        if v == f64::INFINITY {
            MARGIN - GUTTER / 2.0
        } else {
            MARGIN + GUTTER + SIZE - (v - self.lo) / (self.hi - self.lo) * SIZE
        }
    }
}

pub fn render(doc: &DiagramDocument) -> String {
    let frame = Frame::new(doc);
    let width = 2.0 * MARGIN + GUTTER + SIZE + 120.0;
    let height = 2.0 * MARGIN + GUTTER + SIZE;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    // axes, diagonal and gutters
    let (x0, x1) = (frame.x(frame.lo), frame.x(frame.hi));
    let (y0, y1) = (frame.y(frame.lo), frame.y(frame.hi));
    let _ = writeln!(s, r#"<g class="axes" stroke="black" stroke-width="1" fill="none">"#);
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>"#);
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>"#);
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke-dasharray="4 3"/>"#);
    let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-dasharray="2 2"/>"#, MARGIN - GUTTER, frame.y(f64::INFINITY), x1, frame.y(f64::INFINITY));
    let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-dasharray="2 2"/>"#, frame.x(f64::NEG_INFINITY), MARGIN - GUTTER, frame.x(f64::NEG_INFINITY), y0);
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="11">"#);
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="start">{}</text>"#, x0, y0 + 16.0, format_real(frame.lo));
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#, x1, y0 + 16.0, format_real(frame.hi));
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">birth</text>"#, (x0 + x1) / 2.0, y0 + 30.0);
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">death</text>"#, x0 - 4.0, (y0 + y1) / 2.0);
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">+inf</text>"#, MARGIN - GUTTER - 2.0, frame.y(f64::INFINITY) + 4.0);
    let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">-inf</text>"#, frame.x(f64::NEG_INFINITY), y0 + 16.0);
    let _ = writeln!(s, "</g>");

    for e in doc.entries() {
        let (cx, cy) = (frame.x(e.birth), frame.y(e.death));
        let (pdec, qdec) = e.behavior.decorations();
        let dx = if pdec == Decoration::Plus { TICK } else { -TICK };
        let dy = if qdec == Decoration::Plus { -TICK } else { TICK };
        let c = color(e.dim);
        let _ = writeln!(
            s,
            r#"<g class="mark" data-dim="{}" data-type="{}" data-ticks="{}{}"><circle cx="{cx}" cy="{cy}" r="3.5" fill="{c}"/><line x1="{cx}" y1="{cy}" x2="{}" y2="{}" stroke="{c}" stroke-width="2"/>{}</g>"#,
            e.dim,
            e.behavior.code(),
            pdec.symbol(),
            qdec.symbol(),
            cx + dx,
            cy + dy,
            if e.multiplicity > 1 {
                format!(r#"<text x="{}" y="{}" font-size="10" font-family="sans-serif">{}</text>"#, cx + 5.0, cy - 5.0, e.multiplicity)
            } else {
                String::new()
            }
        );
    }

    let mut dims: Vec<usize> = doc.entries().iter().map(|e| e.dim).collect();
    dims.dedup();
    if !dims.is_empty() {
        let lx = x1 + 30.0;
        let _ = writeln!(s, r#"<g class="legend" font-family="sans-serif" font-size="12">"#);
        for (i, d) in dims.iter().enumerate() {
            let ly = MARGIN + GUTTER + 18.0 * i as f64;
            let _ = writeln!(s, r#"<circle cx="{lx}" cy="{ly}" r="4" fill="{}"/><text x="{}" y="{}">H{d}</text>"#, color(*d), lx + 10.0, ly + 4.0);
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}
