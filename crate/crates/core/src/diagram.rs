//! `(p, q)`-diagrams: deterministic ASCII and SVG renderings of a
//! bigrading. A node of dimension one is a dot, a node of dimension two or
//! more is a dot inside a ring.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bigrading::BigradingDims;

/// Lattice spacing of the SVG rendering, in pixels.
pub const SVG_STEP: i64 = 20;
const SVG_MARGIN: i64 = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramSpec {
    /// Sorted `[p, q, dim]` triples.
    pub nodes: BigradingDims,
    /// `[p_min, p_max, q_min, q_max]`; defaults to the bounding box of the
    /// nodes and the origin.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<[i64; 4]>,
    /// Draw `N`-arrows `(p, q) → (p−1, q−1)` between present nodes (SVG
    /// only).
    #[serde(default)]
    pub arrows: bool,
}

impl DiagramSpec {
    pub fn new(nodes: BigradingDims) -> Self {
        DiagramSpec { nodes, range: None, arrows: false }
    }

    pub fn with_arrows(mut self, arrows: bool) -> Self {
        self.arrows = arrows;
        self
    }

    /// The drawn window, always containing the origin.
    pub fn bounds(&self) -> [i64; 4] {
        if let Some(r) = self.range {
            return [r[0].min(0), r[1].max(0), r[2].min(0), r[3].max(0)];
        }
        let mut b = [0, 0, 0, 0];
        for (p, q) in self.nodes.support() {
            b = [b[0].min(p), b[1].max(p), b[2].min(q), b[3].max(q)];
        }
        b
    }

    /// One text row per `q` (top row `q_max`), one column per `p`: `*` for
    /// a node of dimension one, `@` for dimension at least two, `.` on an
    /// empty axis cell.
    pub fn ascii(&self) -> String {
        let [p0, p1, q0, q1] = self.bounds();
        let mut out = String::new();
        for q in (q0..=q1).rev() {
            let mut line = String::new();
            for p in p0..=p1 {
                let c = match self.nodes.get(p, q) {
                    0 if p == 0 || q == 0 => '.',
                    0 => ' ',
                    1 => '*',
                    _ => '@',
                };
                if p > p0 {
                    line.push(' ');
                }
                line.push(c);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// SVG on a fixed lattice: filled dots, stroked rings around nodes of
    /// dimension at least two, axes through the origin.
    pub fn svg(&self) -> String {
        let [p0, p1, q0, q1] = self.bounds();
        let width = (p1 - p0) * SVG_STEP + 2 * SVG_MARGIN;
        let height = (q1 - q0) * SVG_STEP + 2 * SVG_MARGIN;
        let x = |p: i64| SVG_MARGIN + (p - p0) * SVG_STEP;
        let y = |q: i64| SVG_MARGIN + (q1 - q) * SVG_STEP;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        if self.arrows {
            s.push_str(concat!(
                r#"<defs><marker id="arrow" markerWidth="6" markerHeight="6" refX="5" refY="3" orient="auto">"#,
                r#"<path d="M0,0 L6,3 L0,6 z" fill="gray"/></marker></defs>"#,
                "\n"
            ));
        }
        let _ = writeln!(
            s,
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
            x(p0) - SVG_STEP / 2,
            y(0),
            x(p1) + SVG_STEP / 2,
            y(0)
        );
        let _ = writeln!(
            s,
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
            x(0),
            y(q0) + SVG_STEP / 2,
            x(0),
            y(q1) - SVG_STEP / 2
        );
        if self.arrows {
            for (p, q) in self.nodes.support() {
                if self.nodes.get(p - 1, q - 1) > 0 {
                    let _ = writeln!(
                        s,
                        r#"<line class="arrow" x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-width="1" marker-end="url(#arrow)"/>"#,
                        x(p) - 4,
                        y(q) + 4,
                        x(p - 1) + 5,
                        y(q - 1) - 5
                    );
                }
            }
        }
        for (p, q, d) in self.nodes.triples() {
            let _ = writeln!(s, r#"<circle class="node" cx="{}" cy="{}" r="3" fill="black"/>"#, x(p), y(q));
            if d >= 2 {
                let _ = writeln!(
                    s,
                    r#"<circle class="ring" cx="{}" cy="{}" r="7" fill="none" stroke="black" stroke-width="1"/>"#,
                    x(p),
                    y(q)
                );
            }
        }
        s.push_str("</svg>\n");
        s
    }
}
