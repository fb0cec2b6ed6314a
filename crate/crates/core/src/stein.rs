//! Two disjoint induced trees covering a triangulation `G` correspond to a
//! Hamilton cycle of its dual `P`: the cycle is the set of dual edges crossing
//! the cut between the trees.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::planar::{mask_of, DualCorrespondence, PlanarGraph};
use crate::tree_pair::CoverPair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteinError {
    #[error("dual vertex {vertex} has {degree} cut edges, expected 2")]
    DegreeViolation { vertex: usize, degree: usize },
    #[error("not a Hamilton cycle: {0}")]
    NotHamiltonian(String),
    #[error("not a cover of the triangulation: {0}")]
    NotACover(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Edge set of a Hamilton cycle, as sorted `(min, max)` endpoint pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HamiltonCycle {
    edges: Vec<(usize, usize)>,
}

impl HamiltonCycle {
    pub fn new(graph: &PlanarGraph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, SteinError> {
        let edges = canonical(edges);
        if !verify_hamilton(graph, &edges) {
            return Err(SteinError::NotHamiltonian(format!(
                "{} edges do not form one spanning cycle of {} vertices",
                edges.len(),
                graph.vertex_count()
            )));
        }
        Ok(HamiltonCycle { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Edge ids in `graph`, ascending.
    pub fn edge_ids(&self, graph: &PlanarGraph) -> Vec<usize> {
        let mut ids: Vec<usize> = self.edges.iter().filter_map(|&(u, v)| graph.edge_id(u, v)).collect();
        ids.sort_unstable();
        ids
    }

    /// Vertex sequence starting at 0 and continuing to its smaller neighbour.
    pub fn vertex_order(&self) -> Vec<usize> {
        cycles_of(&self.edges).into_iter().next().unwrap_or_default()
    }
}

impl fmt::Display for HamiltonCycle {
    /// `CYC1` text.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CYC1")?;
        for &(u, v) in &self.edges {
            writeln!(f, "{}-{}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

/// A 2-factor with more than one cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleCover {
    /// Each cycle as a vertex sequence from its lowest vertex; cycles ordered
    /// by that vertex.
    pub cycles: Vec<Vec<usize>>,
}

impl CycleCover {
    pub fn component_count(&self) -> usize {
        self.cycles.len()
    }
}

/// The dual cut of a cover.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DualCycle {
    Hamilton(HamiltonCycle),
    Cover(CycleCover),
}

impl DualCycle {
    pub fn hamilton(&self) -> Option<&HamiltonCycle> {
        match self {
            DualCycle::Hamilton(h) => Some(h),
            DualCycle::Cover(_) => None,
        }
    }
}

fn canonical(edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    edges
}

/// Splits a 2-regular edge list into cycles (vertex sequences).
fn cycles_of(edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let n = edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
    let mut adj = vec![Vec::with_capacity(2); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] || adj[start].is_empty() {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = *adj[start].iter().min().unwrap();
        while cur != start && !seen[cur] {
            seen[cur] = true;
            cycle.push(cur);
            let next = adj[cur].iter().copied().find(|&w| w != prev).unwrap_or(start);
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    cycles
}

/// `true` iff `edges` are distinct edges of `graph` forming a single cycle
/// through every vertex.
pub fn verify_hamilton(graph: &PlanarGraph, edges: &[(usize, usize)]) -> bool {
    let n = graph.vertex_count();
    if edges.len() != n || n < 3 {
        return false;
    }
    let edges = canonical(edges.iter().copied());
    if edges.windows(2).any(|w| w[0] == w[1]) || edges.iter().any(|&(u, v)| v >= n || !graph.has_edge(u, v)) {
        return false;
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    if degree.iter().any(|&d| d != 2) {
        return false;
    }
    let cycles = cycles_of(&edges);
    cycles.len() == 1 && cycles[0].len() == n
}

/// Dual edges of all `X`–`Y` edges of `graph`. `corr` maps `graph` to `dual`.
pub fn cover_to_dual_cycle(
    graph: &PlanarGraph,
    dual: &PlanarGraph,
    cover: &CoverPair,
    corr: &DualCorrespondence,
) -> Result<DualCycle, SteinError> {
    let n = graph.vertex_count();
    if cover.x.len() + cover.y.len() != n || cover.x.iter().chain(&cover.y).any(|&v| v >= n) {
        return Err(SteinError::NotACover(format!(
            "{} + {} ids for {n} vertices",
            cover.x.len(),
            cover.y.len()
        )));
    }
    let in_x = cover.x_mask(n);
    let cut: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(a, b))| in_x[a] != in_x[b])
        .map(|(e, _)| dual.edge(corr.dual_edge(e)))
        .collect();
    let mut degree = vec![0usize; dual.vertex_count()];
    for &(u, v) in &cut {
        degree[u] += 1;
        degree[v] += 1;
    }
    if let Some(vertex) = degree.iter().position(|&d| d != 2) {
        return Err(SteinError::DegreeViolation {
            vertex,
            degree: degree[vertex],
        });
    }
    let edges = canonical(cut);
    let mut cycles = cycles_of(&edges);
    if cycles.len() == 1 {
        Ok(DualCycle::Hamilton(HamiltonCycle { edges }))
    } else {
        cycles.sort();
        Ok(DualCycle::Cover(CycleCover { cycles }))
    }
}

/// Inverse of [`cover_to_dual_cycle`]: the vertices of `graph` on the side of
/// the cycle containing vertex 0 form `X`. `corr` maps `graph` to `dual`.
pub fn cycle_to_cover(
    graph: &PlanarGraph,
    dual: &PlanarGraph,
    cycle: &HamiltonCycle,
    corr: &DualCorrespondence,
) -> Result<CoverPair, SteinError> {
    if !verify_hamilton(dual, cycle.edges()) {
        return Err(SteinError::NotHamiltonian(
            "input is not a Hamilton cycle of the dual".into(),
        ));
    }
    let n = graph.vertex_count();
    let cut = mask_of(
        graph.edge_count(),
        cycle.edge_ids(dual).into_iter().map(|de| corr.primal_edge(de)),
    );
    let mut in_x = vec![false; n];
    let mut queue = VecDeque::from([0]);
    in_x[0] = true;
    while let Some(v) = queue.pop_front() {
        for w in graph.neighbors(v) {
            let e = graph.edge_id(v, w).unwrap();
            if !cut[e] && !in_x[w] {
                in_x[w] = true;
                queue.push_back(w);
            }
        }
    }
    let in_y: Vec<bool> = in_x.iter().map(|b| !b).collect();
    if !graph.induces_tree(&in_x) || !graph.induces_tree(&in_y) {
        return Err(SteinError::NotHamiltonian("cut sides are not two trees".into()));
    }
    Ok(CoverPair {
        x: (0..n).filter(|&v| in_x[v]).collect(),
        y: (0..n).filter(|&v| in_y[v]).collect(),
        connected_x: true,
        connected_y: true,
    })
}

/// Parses `CYC1` text (1-based `u-v` lines, sorted, one per line).
pub fn from_cyc1(graph: &PlanarGraph, text: &str) -> Result<HamiltonCycle, SteinError> {
    let syntax = |line: usize, message: &str| SteinError::Syntax {
        line,
        message: message.to_string(),
    };
    let mut lines = text.lines();
    if lines.next() != Some("CYC1") {
        return Err(syntax(1, "expected header `CYC1`"));
    }
    let mut edges = Vec::new();
    for (i, line) in lines.enumerate() {
        let (a, b) = line.split_once('-').ok_or_else(|| syntax(i + 2, "expected `u-v`"))?;
        let id = |s: &str| match s.parse::<usize>() {
            Ok(v) if v > 0 && v <= graph.vertex_count() => Ok(v - 1),
            _ => Err(syntax(i + 2, &format!("bad vertex id `{s}`"))),
        };
        edges.push((id(a)?, id(b)?));
    }
    let cycle = HamiltonCycle::new(graph, edges)?;
    if cycle.to_string() != text {
        return Err(syntax(1, "not in canonical form"));
    }
    Ok(cycle)
}
