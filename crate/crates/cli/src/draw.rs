//! DOT and SVG output. SVG coordinates come from a Tutte barycentric
//! embedding: the longest face is pinned to a regular polygon and every other
//! vertex sits at the average of its neighbours.

use std::fmt::Write;

use nalgebra::{DMatrix, DVector};
use quadham::e4::{Colour, TriColouring};
use quadham::planar::vertex_connectivity_at_least;
use quadham::stein::HamiltonCycle;
use quadham::tree_pair::{CoverPair, Side};
use quadham::PlanarGraph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DrawError {
    #[error("graph is not 3-connected, no straight-line convex drawing")]
    NotThreeConnected,
    #[error("barycentric system is singular or inaccurate (residual {0:e})")]
    Singular(f64),
    #[error("edges {0} and {1} cross in the drawing")]
    Crossing(usize, usize),
}

/// Optional decorations shared by both formats.
#[derive(Clone, Debug, Default)]
pub struct Overlay {
    pub colouring: Option<TriColouring>,
    pub cycle: Option<HamiltonCycle>,
    pub cover: Option<CoverPair>,
}

impl Overlay {
    fn marked(&self, u: usize, v: usize) -> bool {
        self.cycle.as_ref().is_some_and(|h| h.contains(u, v))
    }

    /// `(fill, text)` colours for vertex `v`.
    fn fill(&self, v: usize) -> (&'static str, &'static str) {
        if let Some(c) = &self.colouring {
            return match c.colour(v) {
                Colour::Black => ("black", "white"),
                Colour::White => ("white", "black"),
                Colour::Red => ("red", "white"),
            };
        }
        if let Some(cover) = &self.cover {
            return match cover.side(v) {
                Side::X => ("lightblue", "black"),
                Side::Y => ("orange", "black"),
            };
        }
        ("white", "black")
    }
}

pub fn to_dot(graph: &PlanarGraph, overlay: &Overlay) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    let decorated = overlay.colouring.is_some() || overlay.cover.is_some();
    for v in graph.vertices() {
        if decorated {
            let (fill, text) = overlay.fill(v);
            writeln!(out, "  {} [style=filled, fillcolor={fill}, fontcolor={text}];", v + 1).unwrap();
        } else {
            writeln!(out, "  {};", v + 1).unwrap();
        }
    }
    for &(u, v) in graph.edges() {
        if overlay.marked(u, v) {
            writeln!(out, "  {} -- {} [color=red, penwidth=3];", u + 1, v + 1).unwrap();
        } else {
            writeln!(out, "  {} -- {};", u + 1, v + 1).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Vertex positions in `[-1, 1]^2`.
pub fn tutte_embedding(graph: &PlanarGraph) -> Result<Vec<(f64, f64)>, DrawError> {
    let n = graph.vertex_count();
    if n < 4 || !vertex_connectivity_at_least(graph, 3) {
        return Err(DrawError::NotThreeConnected);
    }
    let faces = graph.faces();
    let outer = (0..faces.len())
        .max_by_key(|&f| (faces.face_len(f), std::cmp::Reverse(f)))
        .unwrap();
    let ring = graph.face_vertices(outer);
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    for (i, &v) in ring.iter().enumerate() {
        let angle = std::f64::consts::TAU * i as f64 / ring.len() as f64 + std::f64::consts::FRAC_PI_2;
        pos[v] = (angle.cos(), angle.sin());
        fixed[v] = true;
    }
    let free: Vec<usize> = graph.vertices().filter(|&v| !fixed[v]).collect();
    if free.is_empty() {
        return Ok(pos);
    }
    let mut index = vec![usize::MAX; n];
    for (i, &v) in free.iter().enumerate() {
        index[v] = i;
    }
    let m = free.len();
    let mut a = DMatrix::<f64>::zeros(m, m);
    let mut bx = DVector::<f64>::zeros(m);
    let mut by = DVector::<f64>::zeros(m);
    for (i, &v) in free.iter().enumerate() {
        a[(i, i)] = graph.degree(v) as f64;
        for w in graph.neighbors(v) {
            if fixed[w] {
                bx[i] += pos[w].0;
                by[i] += pos[w].1;
            } else {
                a[(i, index[w])] -= 1.0;
            }
        }
    }
    let lu = a.clone().lu();
    let (x, y) = match (lu.solve(&bx), lu.solve(&by)) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(DrawError::Singular(f64::INFINITY)),
    };
    let residual = (&a * &x - &bx).amax().max((&a * &y - &by).amax());
    if residual.is_nan() || residual >= 1e-9 {
        return Err(DrawError::Singular(residual));
    }
    for (i, &v) in free.iter().enumerate() {
        pos[v] = (x[i], y[i]);
    }
    if let Some((e, f)) = crossings(graph, &pos).first() {
        return Err(DrawError::Crossing(*e, *f));
    }
    Ok(pos)
}

fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Pairs of vertex-disjoint edges whose segments properly intersect.
pub fn crossings(graph: &PlanarGraph, pos: &[(f64, f64)]) -> Vec<(usize, usize)> {
    let edges = graph.edges();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (p, q, r, s) = (pos[a], pos[b], pos[c], pos[d]);
            let eps = 1e-12;
            let d1 = orient(p, q, r);
            let d2 = orient(p, q, s);
            let d3 = orient(r, s, p);
            let d4 = orient(r, s, q);
            if d1 * d2 < -eps && d3 * d4 < -eps {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn to_svg(graph: &PlanarGraph, overlay: &Overlay) -> Result<String, DrawError> {
    let pos = tutte_embedding(graph)?;
    let (size, margin) = (400.0, 24.0);
    let scale = size / 2.0 - margin;
    let px = |v: usize| (size / 2.0 + scale * pos[v].0, size / 2.0 - scale * pos[v].1);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    out.push_str("<g stroke=\"#555\" stroke-width=\"1.5\">\n");
    for &(u, v) in graph.edges() {
        let ((x1, y1), (x2, y2)) = (px(u), px(v));
        let extra = if overlay.marked(u, v) {
            r#" stroke="crimson" stroke-width="4""#
        } else {
            ""
        };
        writeln!(
            out,
            r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"{extra}/>"#
        )
        .unwrap();
    }
    out.push_str("</g>\n<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n");
    for v in graph.vertices() {
        let (x, y) = px(v);
        let (fill, text) = overlay.fill(v);
        writeln!(
            out,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="8" fill="{fill}" stroke="black"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{x:.3}" y="{:.3}" fill="{text}">{}</text>"#,
            y + 3.5,
            v + 1
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
