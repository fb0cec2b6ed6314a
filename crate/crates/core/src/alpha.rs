//! Growing E(4) triangulations from the octahedron by vertex splitting.
//!
//! The α-operation replaces a non-red vertex `v` by a path `x u y`. With the
//! neighbour cycle of `v` rotated to start at `s = v_1` and `t = v_k` found by
//! walking clockwise, `x` takes the arc `v_1 .. v_k`, `y` takes the arc
//! `v_k .. v_n, v_1`, and `u` (degree 4, red) sees `v_1, x, v_k, y`.
//!
//! Renumbering: on a graph with `n` vertices the new vertices are first given
//! ids `n, n+1, n+2` (for `x, u, y`), then `v` is deleted and every id above it
//! shifts down by one. So `x, u, y` end up as `n-1, n, n+1`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use thiserror::Error;

use crate::e4::{Colour, TriColouring};
use crate::planar::{GraphError, PlanarGraph};
use crate::solids;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphaError {
    #[error("invalid alpha triple ({s}, {v}, {t})")]
    InvalidAlphaTriple { s: usize, v: usize, t: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("ALPHA1 line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// A path `s v t` through the vertex `v` to be split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphaOp {
    pub s: usize,
    pub v: usize,
    pub t: usize,
}

impl AlphaOp {
    pub fn new(s: usize, v: usize, t: usize) -> Self {
        AlphaOp { s, v, t }
    }
}

/// The octahedron with black `{0,1}`, white `{2,3}` and red `{4,5}`.
pub fn octahedron() -> (PlanarGraph, TriColouring) {
    use Colour::*;
    let colouring = TriColouring::new(vec![Black, Black, White, White, Red, Red]);
    (solids::octahedron(), colouring)
}

/// Every admissible triple, sorted by `(v, s, t)`.
pub fn alpha_candidates(graph: &PlanarGraph, colouring: &TriColouring) -> Vec<AlphaOp> {
    let mut ops = Vec::new();
    for v in graph.vertices() {
        if colouring.is(v, Colour::Red) {
            continue;
        }
        let mut others: Vec<usize> = graph.neighbors(v).filter(|&w| !colouring.is(w, Colour::Red)).collect();
        others.sort_unstable();
        for &s in &others {
            for &t in &others {
                if s != t {
                    ops.push(AlphaOp { s, v, t });
                }
            }
        }
    }
    ops
}

/// Splits `v` into the path `x u y` as described in the module docs, with no
/// colour requirements. `s` and `t` must be distinct neighbours of `v`.
pub fn split_vertex(graph: &PlanarGraph, s: usize, v: usize, t: usize) -> Result<PlanarGraph, AlphaError> {
    let invalid = AlphaError::InvalidAlphaTriple { s, v, t };
    let n = graph.vertex_count();
    if v >= n || s == t {
        return Err(invalid);
    }
    let cycle = graph.rotation(v);
    let deg = cycle.len();
    let Some(start) = cycle.iter().position(|&w| w == s) else {
        return Err(invalid);
    };
    let rotated: Vec<usize> = (0..deg).map(|i| cycle[(start + i) % deg]).collect();
    let Some(k) = rotated.iter().position(|&w| w == t) else {
        return Err(invalid);
    };

    let (x, u, y) = (n, n + 1, n + 2);
    let mut rotation = graph.rotation_table().to_vec();
    for (i, &w) in rotated.iter().enumerate() {
        let at = rotation[w].iter().position(|&z| z == v).unwrap();
        let replacement: &[usize] = if i == 0 {
            &[x, u, y]
        } else if i == k {
            &[y, u, x]
        } else if i < k {
            &[x]
        } else {
            &[y]
        };
        rotation[w].splice(at..=at, replacement.iter().copied());
    }
    let mut x_rot = rotated[..=k].to_vec();
    x_rot.push(u);
    let mut y_rot = rotated[k..].to_vec();
    y_rot.extend([s, u]);
    rotation.push(x_rot);
    rotation.push(vec![s, x, t, y]);
    rotation.push(y_rot);

    rotation.remove(v);
    for nbrs in &mut rotation {
        for w in nbrs.iter_mut() {
            if *w > v {
                *w -= 1;
            }
        }
    }
    Ok(PlanarGraph::from_rotation(rotation)?)
}

/// Applies one α-operation, keeping the colouring: `x` and `y` inherit the
/// colour of `v`, `u` joins the red class.
pub fn apply_alpha(
    graph: &PlanarGraph,
    colouring: &TriColouring,
    op: AlphaOp,
) -> Result<(PlanarGraph, TriColouring), AlphaError> {
    let AlphaOp { s, v, t } = op;
    let n = graph.vertex_count();
    let in_range = s < n && v < n && t < n;
    if !in_range
        || s == t
        || [s, v, t].iter().any(|&w| colouring.is(w, Colour::Red))
        || !graph.has_edge(s, v)
        || !graph.has_edge(v, t)
    {
        return Err(AlphaError::InvalidAlphaTriple { s, v, t });
    }
    let grown = split_vertex(graph, s, v, t)?;
    let kept = colouring.colour(v);
    let mut colours: Vec<Colour> = colouring.colours().to_vec();
    colours.remove(v);
    colours.extend([kept, Colour::Red, kept]);
    Ok((grown, TriColouring::new(colours)))
}

/// Base graph plus the sequence of operations that produced an instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenerationHistory {
    pub seed: Option<u64>,
    pub ops: Vec<AlphaOp>,
}

impl GenerationHistory {
    /// Re-applies every operation to the octahedron.
    pub fn replay(&self) -> Result<(PlanarGraph, TriColouring), AlphaError> {
        let (mut graph, mut colouring) = octahedron();
        for &op in &self.ops {
            (graph, colouring) = apply_alpha(&graph, &colouring, op)?;
        }
        Ok((graph, colouring))
    }

    /// `ALPHA1` text: magic line, `BASE octahedron`, optional `SEED <n>`, then
    /// one 1-based `s v t` triple per line.
    pub fn to_alpha1(&self) -> String {
        let mut out = String::from("ALPHA1\nBASE octahedron\n");
        if let Some(seed) = self.seed {
            out.push_str(&format!("SEED {seed}\n"));
        }
        for op in &self.ops {
            out.push_str(&format!("{} {} {}\n", op.s + 1, op.v + 1, op.t + 1));
        }
        out
    }

    pub fn from_alpha1(text: &str) -> Result<Self, AlphaError> {
        let syntax = |line: usize, message: &str| AlphaError::Syntax {
            line,
            message: message.into(),
        };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        if lines.next().map(|(_, l)| l) != Some("ALPHA1") {
            return Err(syntax(1, "expected `ALPHA1`"));
        }
        if lines.next().map(|(_, l)| l) != Some("BASE octahedron") {
            return Err(syntax(2, "expected `BASE octahedron`"));
        }
        let mut history = GenerationHistory::default();
        for (lineno, line) in lines {
            if let Some(seed) = line.strip_prefix("SEED ") {
                if lineno != 3 {
                    return Err(syntax(lineno, "SEED must directly follow BASE"));
                }
                history.seed = Some(seed.parse().map_err(|_| syntax(lineno, "invalid seed"))?);
                continue;
            }
            let ids: Vec<usize> = line
                .split(' ')
                .map(|tok| tok.parse::<usize>().ok().filter(|&v| v > 0).map(|v| v - 1))
                .collect::<Option<_>>()
                .ok_or_else(|| syntax(lineno, "expected three positive ids"))?;
            let [s, v, t] = ids[..] else {
                return Err(syntax(lineno, "expected three positive ids"));
            };
            history.ops.push(AlphaOp { s, v, t });
        }
        Ok(history)
    }
}

impl fmt::Display for GenerationHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_alpha1())
    }
}

/// Applies `ops` α-operations, each picked uniformly among the candidates by
/// a xoshiro256** generator seeded with `seed`.
pub fn random_instance(ops: usize, seed: u64) -> (PlanarGraph, TriColouring, GenerationHistory) {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let (mut graph, mut colouring) = octahedron();
    let mut history = GenerationHistory {
        seed: Some(seed),
        ops: Vec::with_capacity(ops),
    };
    for _ in 0..ops {
        let candidates = alpha_candidates(&graph, &colouring);
        assert!(!candidates.is_empty(), "E(4) instance without alpha candidates");
        let op = candidates[rng.gen_range(0..candidates.len())];
        (graph, colouring) = apply_alpha(&graph, &colouring, op).expect("candidate triples are valid");
        history.ops.push(op);
    }
    (graph, colouring, history)
}
