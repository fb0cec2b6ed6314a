//! Brute-force ground truth and the bound reports built on it.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::e4::{classify, e4_colouring, Colour, TriColouring};
use crate::planar::{dual_graph, DualCorrespondence, PlanarGraph};
use crate::stein::{cover_to_dual_cycle, DualCycle, HamiltonCycle};
use crate::tree_pair::{
    build_auxiliary_j, enumerate_thm13_covers, extend_cover, greedy_chromatic_independent_set, prescribed_side,
    seed_pair_thm14, ChoiceVector, CoverPair, Side,
};

/// Largest cubic graph handed to [`enumerate_hamilton_cycles`] by default.
pub const HAMILTON_CAP: usize = 40;
/// Largest triangulation [`enumerate_cover_pairs`] sweeps.
pub const COVER_CAP: usize = 24;
/// Largest graph whose automorphism group is enumerated.
pub const AUTOMORPHISM_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {size} vertices, cap is {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("faces {a} and {b} are at distance {distance}, need more than 4")]
    DistanceViolation { a: usize, b: usize, distance: usize },
    #[error("pipeline failed at {stage}: {message}")]
    PipelineFailure { stage: &'static str, message: String },
}

fn stage<E: fmt::Display>(stage: &'static str) -> impl Fn(E) -> OracleError {
    move |e| OracleError::PipelineFailure {
        stage,
        message: e.to_string(),
    }
}

/// All Hamilton cycles of `graph` as canonical edge sets, sorted.
///
/// Cycles start at vertex 0 and are kept only when the second vertex is
/// smaller than the last, so each is produced once.
pub fn enumerate_hamilton_cycles(graph: &PlanarGraph, limit: usize) -> Result<Vec<HamiltonCycle>, OracleError> {
    let n = graph.vertex_count();
    if n > limit {
        return Err(OracleError::CapExceeded { size: n, cap: limit });
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut path = vec![0];
    let mut visited = vec![false; n];
    visited[0] = true;
    extend_path(graph, &mut path, &mut visited, &mut found);
    let mut cycles: Vec<HamiltonCycle> = found
        .into_iter()
        .map(|order| {
            let edges = (0..n).map(|i| (order[i], order[(i + 1) % n]));
            HamiltonCycle::new(graph, edges).expect("backtracking yields Hamilton cycles")
        })
        .collect();
    cycles.sort();
    cycles.dedup();
    Ok(cycles)
}

fn extend_path(graph: &PlanarGraph, path: &mut Vec<usize>, visited: &mut [bool], found: &mut Vec<Vec<usize>>) {
    let n = visited.len();
    let cur = *path.last().unwrap();
    if path.len() == n {
        if graph.has_edge(cur, 0) && path[1] < path[n - 1] {
            found.push(path.clone());
        }
        return;
    }
    for next in graph.neighbors(cur) {
        if visited[next] {
            continue;
        }
        visited[next] = true;
        path.push(next);
        // `cur` just became interior; its unvisited neighbours lose an exit
        let stranded = graph.neighbors(cur).any(|w| {
            !visited[w]
                && graph
                    .neighbors(w)
                    .filter(|&z| !visited[z] || z == next || z == 0)
                    .count()
                    < 2
        });
        if !stranded {
            extend_path(graph, path, visited, found);
        }
        path.pop();
        visited[next] = false;
    }
}

/// Result of sweeping every bipartition `{X, Y}` of a triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCount {
    /// Both sides induce forests.
    pub acyclic: usize,
    /// Both sides induce trees.
    pub tree_pairs: usize,
    /// The tree pairs, with vertex 0 in `X`, when requested.
    pub pairs: Option<Vec<CoverPair>>,
}

fn induces_forest_bits(adj: &[u32], mask: u32) -> (bool, bool) {
    if mask == 0 {
        return (true, false);
    }
    let mut edges = 0u32;
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        edges += (adj[v] & mask).count_ones();
    }
    edges /= 2;
    let mut components = 0u32;
    let mut left = mask;
    while left != 0 {
        components += 1;
        let mut frontier = left & left.wrapping_neg();
        let mut reached = frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & mask & !reached;
            reached |= new;
            frontier |= new;
        }
        left &= !reached;
    }
    let forest = edges + components == mask.count_ones();
    (forest, forest && components == 1)
}

/// Counts the unordered bipartitions of `V(graph)` into two induced forests,
/// and those into two induced trees.
pub fn enumerate_cover_pairs(graph: &PlanarGraph, collect: bool) -> Result<CoverCount, OracleError> {
    let n = graph.vertex_count();
    if n > COVER_CAP || n == 0 {
        return Err(OracleError::CapExceeded {
            size: n,
            cap: COVER_CAP,
        });
    }
    let adj: Vec<u32> = graph
        .vertices()
        .map(|v| graph.neighbors(v).fold(0u32, |m, w| m | (1 << w)))
        .collect();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let tally = |m: u32| {
        let x = 1 | (m << 1);
        let (fx, tx) = induces_forest_bits(&adj, x);
        if !fx {
            return (0usize, 0usize, None);
        }
        let (fy, ty) = induces_forest_bits(&adj, all & !x);
        if !fy {
            return (0, 0, None);
        }
        let tree = tx && ty;
        (1, usize::from(tree), (tree && collect).then_some(x))
    };
    let results: Vec<(usize, usize, Option<u32>)> = (0..1u32 << (n - 1)).into_par_iter().map(tally).collect();
    let acyclic = results.iter().map(|r| r.0).sum();
    let tree_pairs = results.iter().map(|r| r.1).sum();
    let pairs = collect.then(|| {
        results
            .iter()
            .filter_map(|r| r.2)
            .map(|x| CoverPair {
                x: (0..n).filter(|&v| x >> v & 1 == 1).collect(),
                y: (0..n).filter(|&v| x >> v & 1 == 0).collect(),
                connected_x: true,
                connected_y: true,
            })
            .collect()
    });
    Ok(CoverCount {
        acyclic,
        tree_pairs,
        pairs,
    })
}

/// `3^(2|P*| / Δ(P*)^2)`, with `|P*|` the number of faces of `graph` and
/// `Δ(P*)` the longest face.
pub fn hamilton_lower_bound(graph: &PlanarGraph) -> f64 {
    let faces = graph.faces();
    let delta = faces.max_face_len() as f64;
    3f64.powf(2.0 * faces.len() as f64 / (delta * delta))
}

/// `3^(2|G| / Δ(G)^2)` for a triangulation `G`.
pub fn dual_bound(graph: &PlanarGraph) -> f64 {
    let delta = graph.max_degree() as f64;
    3f64.powf(2.0 * graph.vertex_count() as f64 / (delta * delta))
}

/// Smallest integer count meeting `bound`, with a small tolerance so that an
/// exact integer bound is not pushed up by rounding noise.
pub fn required_count(bound: f64) -> usize {
    (bound - 1e-9).ceil().max(0.0) as usize
}

/// `|B ∪ W| > |G| / 2`.
pub fn check_invariant_i(graph: &PlanarGraph, colouring: &TriColouring) -> bool {
    2 * (colouring.count(Colour::Black) + colouring.count(Colour::White)) > graph.vertex_count()
}

/// All automorphisms of `graph` as vertex permutations, or `None` above
/// [`AUTOMORPHISM_CAP`] vertices.
pub fn automorphisms(graph: &PlanarGraph) -> Option<Vec<Vec<usize>>> {
    let n = graph.vertex_count();
    if n > AUTOMORPHISM_CAP {
        return None;
    }
    fn assign(graph: &PlanarGraph, image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let i = image.len();
        if i == used.len() {
            out.push(image.clone());
            return;
        }
        for w in 0..used.len() {
            if used[w] || graph.degree(w) != graph.degree(i) {
                continue;
            }
            if (0..i).all(|j| graph.has_edge(i, j) == graph.has_edge(w, image[j])) {
                used[w] = true;
                image.push(w);
                assign(graph, image, used, out);
                image.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    assign(graph, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    Some(out)
}

/// Number of orbits of `cycles` under the automorphism group, when it is
/// small enough to enumerate.
pub fn cycle_orbit_count(graph: &PlanarGraph, cycles: &[HamiltonCycle]) -> Option<usize> {
    let autos = automorphisms(graph)?;
    let reps: BTreeSet<Vec<(usize, usize)>> = cycles
        .iter()
        .map(|h| {
            autos
                .iter()
                .map(|perm| {
                    let mut e: Vec<(usize, usize)> = h
                        .edges()
                        .iter()
                        .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
                        .collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap()
        })
        .collect();
    Some(reps.len())
}

/// Outcome of running the tree-pair construction on a cubic graph and
/// comparing its cycle count with the lower bound and the exhaustive count.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub vertices: usize,
    /// `|P*|`.
    pub faces: usize,
    /// `Δ(P*)`.
    pub max_face_len: usize,
    pub bound: f64,
    pub required: usize,
    pub independent_set: usize,
    pub colours_used: usize,
    pub choice_vectors: usize,
    /// Covers whose dual cut is a 2-factor with several cycles.
    pub non_hamiltonian: usize,
    /// Distinct Hamilton cycles produced.
    pub constructive: usize,
    /// Pairs of choice vectors that produced the same cycle.
    pub collisions: Vec<(ChoiceVector, ChoiceVector)>,
    pub oracle: Option<usize>,
    pub oracle_contains_all: Option<bool>,
    pub orbits: Option<usize>,
    pub pass: bool,
    /// The constructed cycles, sorted.
    pub cycles: Vec<HamiltonCycle>,
}

impl fmt::Display for BoundReport {
    /// Stable `key=value` lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        writeln!(f, "theorem=1.1")?;
        writeln!(f, "vertices={}", self.vertices)?;
        writeln!(f, "faces={}", self.faces)?;
        writeln!(f, "max_face_len={}", self.max_face_len)?;
        writeln!(f, "bound={:.6}", self.bound)?;
        writeln!(f, "required={}", self.required)?;
        writeln!(f, "independent_set={}", self.independent_set)?;
        writeln!(f, "colours_used={}", self.colours_used)?;
        writeln!(f, "choice_vectors={}", self.choice_vectors)?;
        writeln!(f, "non_hamiltonian={}", self.non_hamiltonian)?;
        writeln!(f, "constructive={}", self.constructive)?;
        writeln!(f, "collisions={}", self.collisions.len())?;
        for (a, b) in &self.collisions {
            writeln!(f, "collision={a} | {b}")?;
        }
        writeln!(f, "oracle={}", opt(self.oracle))?;
        writeln!(
            f,
            "oracle_contains_all={}",
            self.oracle_contains_all.map_or("-".to_string(), |b| b.to_string())
        )?;
        writeln!(f, "orbits={}", opt(self.orbits))?;
        writeln!(f, "pass={}", self.pass)
    }
}

struct Prepared {
    g: PlanarGraph,
    /// `cubic` to `g`.
    corr_pg: DualCorrespondence,
    /// `g` to `cubic`.
    corr_gp: DualCorrespondence,
    colouring: TriColouring,
}

fn prepare(cubic: &PlanarGraph) -> Result<Prepared, OracleError> {
    let (g, corr_pg) = dual_graph(cubic).map_err(stage("dual"))?;
    let corr_gp = corr_pg.flipped(cubic, &g);
    let colouring = e4_colouring(&g).map_err(stage("colour"))?;
    Ok(Prepared {
        g,
        corr_pg,
        corr_gp,
        colouring,
    })
}

/// Runs the construction on `cubic` (a member of `P(4)`) and checks
/// `distinct cycles >= ⌈bound⌉`, plus containment in the exhaustive set when
/// `cubic` has at most `oracle_cap` vertices.
pub fn verify_theorem11(cubic: &PlanarGraph, oracle_cap: usize) -> Result<BoundReport, OracleError> {
    let class = classify(cubic);
    if !(class.is_cubic && class.is_bipartite && class.is_3_connected && class.has_4face_2factor) {
        return Err(OracleError::Precondition(
            "input must be cubic, bipartite, 3-connected, with a 2-factor of facial 4-cycles".into(),
        ));
    }
    let Prepared {
        g,
        corr_gp: corr,
        colouring,
        ..
    } = prepare(cubic)?;
    let j = build_auxiliary_j(&g, &colouring).map_err(stage("auxiliary"))?;
    let k = greedy_chromatic_independent_set(&j).map_err(stage("independent-set"))?;
    let covers = enumerate_thm13_covers(&g, &colouring, &k.members).map_err(stage("enumerate"))?;

    let mut produced: Vec<(HamiltonCycle, ChoiceVector)> = Vec::new();
    let mut non_hamiltonian = 0;
    for (choices, cover) in &covers {
        match cover_to_dual_cycle(&g, cubic, cover, &corr).map_err(stage("stein"))? {
            DualCycle::Hamilton(h) => produced.push((h, choices.clone())),
            DualCycle::Cover(_) => non_hamiltonian += 1,
        }
    }
    produced.sort();
    let collisions: Vec<(ChoiceVector, ChoiceVector)> = produced
        .windows(2)
        .filter(|w| w[0].0 == w[1].0)
        .map(|w| (w[0].1.clone(), w[1].1.clone()))
        .collect();
    let mut cycles: Vec<HamiltonCycle> = produced.into_iter().map(|(h, _)| h).collect();
    cycles.dedup();

    let bound = hamilton_lower_bound(cubic);
    let required = required_count(bound);
    let (oracle, oracle_contains_all, orbits) = if cubic.vertex_count() <= oracle_cap {
        let all = enumerate_hamilton_cycles(cubic, oracle_cap)?;
        let contains = cycles.iter().all(|h| all.binary_search(h).is_ok());
        (Some(all.len()), Some(contains), cycle_orbit_count(cubic, &all))
    } else {
        (None, None, None)
    };
    let pass =
        cycles.len() >= required && oracle_contains_all.unwrap_or(true) && oracle.is_none_or(|o| o >= cycles.len());
    Ok(BoundReport {
        vertices: cubic.vertex_count(),
        faces: cubic.faces().len(),
        max_face_len: cubic.faces().max_face_len(),
        bound,
        required,
        independent_set: k.members.len(),
        colours_used: k.colours_used,
        choice_vectors: covers.len(),
        non_hamiltonian,
        constructive: cycles.len(),
        collisions,
        oracle,
        oracle_contains_all,
        orbits,
        pass,
        cycles,
    })
}

/// Outcome of forcing a Hamilton cycle through all but one prescribed edge of
/// each face in `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceReport {
    pub faces: Vec<usize>,
    pub chosen: Vec<usize>,
    /// `(v, n(v))` in the triangulation for each face.
    pub targets: Vec<(usize, usize)>,
    /// Colour of each `v` in `targets`.
    pub target_colours: Vec<Colour>,
    pub cover: CoverPair,
    pub cycle: Option<HamiltonCycle>,
    /// Non-chosen boundary edges of faces in `M` missing from the cycle.
    pub missing: Vec<(usize, usize)>,
    /// Every `N(v) \ {n(v)}` lies on its prescribed side, with `v` opposite.
    pub placement_ok: bool,
    pub pass: bool,
}

impl fmt::Display for FaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids = |v: &[usize]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")
            }
        };
        writeln!(f, "theorem=1.2")?;
        writeln!(f, "faces={}", ids(&self.faces))?;
        writeln!(f, "chosen={}", ids(&self.chosen))?;
        writeln!(f, "hamiltonian={}", self.cycle.is_some())?;
        let missing: Vec<String> = self
            .missing
            .iter()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        writeln!(
            f,
            "missing={}",
            if missing.is_empty() {
                "-".to_string()
            } else {
                missing.join(",")
            }
        )?;
        writeln!(f, "placement_ok={}", self.placement_ok)?;
        writeln!(f, "pass={}", self.pass)
    }
}

/// For faces `faces[i]` of `cubic` with edge ids `chosen[i]` on their
/// boundaries, builds a Hamilton cycle containing every other boundary edge.
pub fn verify_theorem12(cubic: &PlanarGraph, faces: &[usize], chosen: &[usize]) -> Result<FaceReport, OracleError> {
    if faces.len() != chosen.len() {
        return Err(OracleError::Precondition("one chosen edge per face is required".into()));
    }
    let face_count = cubic.faces().len();
    for (i, (&f, &e)) in faces.iter().zip(chosen).enumerate() {
        if f >= face_count || !cubic.face_edges(f).contains(&e) {
            return Err(OracleError::Precondition(format!("edge {e} is not on face {f}")));
        }
        for &h in &faces[i + 1..] {
            let distance = cubic.face_distance(f, h);
            if distance <= 4 {
                return Err(OracleError::DistanceViolation { a: f, b: h, distance });
            }
        }
    }

    let Prepared {
        g,
        corr_pg,
        corr_gp,
        colouring,
    } = prepare(cubic)?;
    let targets: Vec<(usize, usize)> = faces
        .iter()
        .zip(chosen)
        .map(|(&f, &e)| {
            let v = corr_pg.dual_vertex(f);
            let (a, b) = g.edge(corr_gp.primal_edge(e));
            (v, if a == v { b } else { a })
        })
        .collect();
    let pair = seed_pair_thm14(&g, &colouring, &targets).map_err(stage("seed"))?;
    let cover = extend_cover(&g, &colouring, &pair).map_err(stage("extend"))?;
    let cycle = cover_to_dual_cycle(&g, cubic, &cover, &corr_gp)
        .map_err(stage("stein"))?
        .hamilton()
        .cloned();

    let placement_ok = targets.iter().all(|&(v, nv)| {
        let side = prescribed_side(&colouring, v, nv);
        let other = if side == Side::X { Side::Y } else { Side::X };
        g.neighbors(v).filter(|&w| w != nv).all(|w| cover.side(w) == side) && cover.side(v) == other
    });
    let missing: Vec<(usize, usize)> = faces
        .iter()
        .zip(chosen)
        .flat_map(|(&f, &e)| cubic.face_edges(f).into_iter().filter(move |&x| x != e))
        .map(|x| cubic.edge(x))
        .filter(|&(u, v)| !cycle.as_ref().is_some_and(|h| h.contains(u, v)))
        .collect();
    let pass = cycle.is_some() && missing.is_empty() && placement_ok;
    Ok(FaceReport {
        faces: faces.to_vec(),
        chosen: chosen.to_vec(),
        target_colours: targets.iter().map(|&(v, _)| colouring.colour(v)).collect(),
        targets,
        cover,
        cycle,
        missing,
        placement_ok,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solids;

    fn k4_cubic() -> PlanarGraph {
        solids::tetrahedron()
    }

    #[test]
    fn hamilton_counts() {
        assert_eq!(
            enumerate_hamilton_cycles(&solids::cube(), HAMILTON_CAP).unwrap().len(),
            6
        );
        assert_eq!(enumerate_hamilton_cycles(&k4_cubic(), HAMILTON_CAP).unwrap().len(), 3);
        let c4 = PlanarGraph::from_rotation(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
        assert_eq!(enumerate_hamilton_cycles(&c4, HAMILTON_CAP).unwrap().len(), 1);
        // dodecahedron: 30 Hamilton cycles as edge sets
        assert_eq!(
            enumerate_hamilton_cycles(&solids::dodecahedron(), HAMILTON_CAP)
                .unwrap()
                .len(),
            30
        );
        assert_eq!(
            enumerate_hamilton_cycles(&solids::cube(), 7),
            Err(OracleError::CapExceeded { size: 8, cap: 7 })
        );
    }

    #[test]
    fn octahedron_cover_sweep() {
        let count = enumerate_cover_pairs(&solids::octahedron(), true).unwrap();
        assert_eq!(count.tree_pairs, 6);
        assert!(count.acyclic >= count.tree_pairs);
        assert_eq!(count.pairs.unwrap().len(), 6);
    }

    #[test]
    fn bounds() {
        let cube = solids::cube();
        let b = hamilton_lower_bound(&cube);
        assert!((b - 3f64.powf(0.75)).abs() < 1e-12);
        assert!((b - 2.2795).abs() < 1e-4);
        assert_eq!(required_count(b), 3);
        assert_eq!(required_count(3.0), 3);
        assert_eq!(required_count(3.0 + 1e-12), 3);
        assert!((dual_bound(&solids::octahedron()) - b).abs() < 1e-12);
    }

    #[test]
    fn cube_theorem11() {
        let r = verify_theorem11(&solids::cube(), HAMILTON_CAP).unwrap();
        assert_eq!(r.choice_vectors, 3);
        assert_eq!(r.constructive, 3);
        assert_eq!(r.required, 3);
        assert_eq!(r.oracle, Some(6));
        assert_eq!(r.oracle_contains_all, Some(true));
        assert_eq!(r.orbits, Some(1));
        assert!(r.collisions.is_empty());
        assert!(r.pass);
        assert!(r.to_string().ends_with("pass=true\n"));
    }

    #[test]
    fn theorem11_precondition() {
        // the dodecahedron is cubic but not bipartite
        assert!(matches!(
            verify_theorem11(&solids::dodecahedron(), HAMILTON_CAP),
            Err(OracleError::Precondition(_))
        ));
    }

    #[test]
    fn cube_single_face() {
        let cube = solids::cube();
        for f in 0..6 {
            for e in cube.face_edges(f) {
                let r = verify_theorem12(&cube, &[f], &[e]).unwrap();
                assert!(r.pass, "{r}");
            }
        }
        let empty = verify_theorem12(&cube, &[], &[]).unwrap();
        assert!(empty.pass);
    }

    #[test]
    fn close_faces_rejected() {
        let cube = solids::cube();
        let (e0, e1) = (cube.face_edges(0)[0], cube.face_edges(1)[0]);
        assert!(matches!(
            verify_theorem12(&cube, &[0, 1], &[e0, e1]),
            Err(OracleError::DistanceViolation { .. })
        ));
    }

    #[test]
    fn invariant_i_on_octahedron() {
        let (g, c) = crate::alpha::octahedron();
        assert!(check_invariant_i(&g, &c));
    }
}
