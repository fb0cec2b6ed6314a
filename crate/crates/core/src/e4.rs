//! Proper 3-colourings of Eulerian triangulations and recognition of the
//! graph families involved.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::planar::{dual_graph, find_small_cut, PlanarGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColourError {
    #[error("graph is not a triangulation")]
    NotTriangulation,
    #[error("colour propagation conflict at vertex {vertex}")]
    NotThreeColourable { vertex: usize },
    #[error("no colour class consists only of degree-4 vertices")]
    NoAllDegree4Class,
    #[error("invalid colouring: {0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Black,
    White,
    Red,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::Black, Colour::White, Colour::Red];

    pub fn letter(self) -> char {
        match self {
            Colour::Black => 'B',
            Colour::White => 'W',
            Colour::Red => 'R',
        }
    }
}

/// A proper 3-colouring with anonymous classes `0, 1, 2`, numbered in order of
/// their lowest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    class: Vec<u8>,
}

impl ClassPartition {
    pub fn class_of(&self, v: usize) -> u8 {
        self.class[v]
    }

    pub fn members(&self, class: u8) -> Vec<usize> {
        (0..self.class.len()).filter(|&v| self.class[v] == class).collect()
    }

    pub fn sizes(&self) -> [usize; 3] {
        let mut sizes = [0; 3];
        for &c in &self.class {
            sizes[c as usize] += 1;
        }
        sizes
    }
}

/// Colours every vertex by seeding face 0 and propagating across edges.
pub fn three_colour(graph: &PlanarGraph) -> Result<ClassPartition, ColourError> {
    three_colour_from(graph, 0)
}

/// Same as [`three_colour`] with an explicit seed face. The result does not
/// depend on the seed, since class numbering is canonical.
pub fn three_colour_from(graph: &PlanarGraph, seed_face: usize) -> Result<ClassPartition, ColourError> {
    if !graph.is_triangulation() {
        return Err(ColourError::NotTriangulation);
    }
    let faces = graph.faces();
    let mut colour = vec![u8::MAX; graph.vertex_count()];
    for (c, v) in graph.face_vertices(seed_face).into_iter().enumerate() {
        colour[v] = c as u8;
    }
    let mut done = vec![false; faces.len()];
    done[seed_face] = true;
    let mut queue = VecDeque::from([seed_face]);
    while let Some(f) = queue.pop_front() {
        for &d in faces.darts(f) {
            let g = faces.face_of_dart(graph.twin(d));
            if done[g] {
                continue;
            }
            done[g] = true;
            // the face across d shares the edge of d; its third vertex is forced
            let (a, b) = (graph.dart_tail(d), graph.dart_head(d));
            let third = graph
                .face_vertices(g)
                .into_iter()
                .find(|&x| x != a && x != b)
                .expect("triangle has a third vertex");
            let forced = 3 - colour[a] - colour[b];
            if colour[third] == u8::MAX {
                colour[third] = forced;
            } else if colour[third] != forced {
                return Err(ColourError::NotThreeColourable { vertex: third });
            }
            queue.push_back(g);
        }
    }
    for &(u, v) in graph.edges() {
        if colour[u] == colour[v] {
            return Err(ColourError::NotThreeColourable { vertex: v });
        }
    }

    let mut relabel = [u8::MAX; 3];
    let mut next = 0;
    for &c in &colour {
        if relabel[c as usize] == u8::MAX {
            relabel[c as usize] = next;
            next += 1;
        }
    }
    Ok(ClassPartition {
        class: colour.into_iter().map(|c| relabel[c as usize]).collect(),
    })
}

/// Lowest-numbered class whose members all have degree 4.
pub fn red_class(graph: &PlanarGraph, partition: &ClassPartition) -> Result<u8, ColourError> {
    (0..3u8)
        .find(|&c| partition.members(c).iter().all(|&v| graph.degree(v) == 4))
        .ok_or(ColourError::NoAllDegree4Class)
}

/// Assignment of black, white and red to the vertices of a triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriColouring {
    colour: Vec<Colour>,
}

impl TriColouring {
    pub fn new(colour: Vec<Colour>) -> Self {
        TriColouring { colour }
    }

    /// Names the classes of `partition`: `red` becomes R, the class holding
    /// the lowest-id non-red vertex becomes B, the remaining one W.
    pub fn from_partition(partition: &ClassPartition, red: u8) -> Self {
        let first_other = partition
            .class
            .iter()
            .copied()
            .find(|&c| c != red)
            .expect("a proper 3-colouring uses three classes");
        let colour = partition
            .class
            .iter()
            .map(|&c| match c {
                c if c == red => Colour::Red,
                c if c == first_other => Colour::Black,
                _ => Colour::White,
            })
            .collect();
        TriColouring { colour }
    }

    pub fn len(&self) -> usize {
        self.colour.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colour.is_empty()
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colour[v]
    }

    pub fn is(&self, v: usize, c: Colour) -> bool {
        self.colour[v] == c
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colour
    }

    pub fn class(&self, c: Colour) -> Vec<usize> {
        (0..self.colour.len()).filter(|&v| self.colour[v] == c).collect()
    }

    pub fn count(&self, c: Colour) -> usize {
        self.colour.iter().filter(|&&x| x == c).count()
    }

    /// Checks properness, rainbow triangles and the all-degree-4 red class.
    pub fn validate(&self, graph: &PlanarGraph) -> Result<(), ColourError> {
        if self.colour.len() != graph.vertex_count() {
            return Err(ColourError::Invalid("length mismatch".into()));
        }
        for &(u, v) in graph.edges() {
            if self.colour[u] == self.colour[v] {
                return Err(ColourError::Invalid(format!("edge {u}-{v} is monochromatic")));
            }
        }
        for f in 0..graph.faces().len() {
            let vs = graph.face_vertices(f);
            let mut seen: Vec<Colour> = vs.iter().map(|&v| self.colour[v]).collect();
            seen.sort();
            seen.dedup();
            if vs.len() != 3 || seen.len() != 3 {
                return Err(ColourError::Invalid(format!("face {f} is not a rainbow triangle")));
            }
        }
        if let Some(v) = self.class(Colour::Red).into_iter().find(|&v| graph.degree(v) != 4) {
            return Err(ColourError::Invalid(format!(
                "red vertex {v} has degree {}",
                graph.degree(v)
            )));
        }
        Ok(())
    }
}

impl fmt::Display for TriColouring {
    /// Three lines `B: ...`, `W: ...`, `R: ...` with 1-based ids.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in Colour::ALL {
            write!(f, "{}:", c.letter())?;
            for v in self.class(c) {
                write!(f, " {}", v + 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Colouring of an E(4) triangulation with its degree-4 class named red.
pub fn e4_colouring(graph: &PlanarGraph) -> Result<TriColouring, ColourError> {
    let partition = three_colour(graph)?;
    let red = red_class(graph, &partition)?;
    Ok(TriColouring::from_partition(&partition, red))
}

/// Calls `visit` with every set of 4-faces that covers each vertex exactly once.
/// Stops early when `visit` returns false.
pub fn search_quad_factors(graph: &PlanarGraph, mut visit: impl FnMut(&[usize]) -> bool) {
    let n = graph.vertex_count();
    let mut options_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut quads: Vec<Vec<usize>> = Vec::new();
    for f in 0..graph.faces().len() {
        let mut vs = graph.face_vertices(f);
        vs.sort_unstable();
        vs.dedup();
        if graph.faces().face_len(f) == 4 && vs.len() == 4 {
            for &v in &vs {
                options_at[v].push(f);
            }
        }
        quads.push(vs);
    }

    struct Search<'a, F> {
        options_at: &'a [Vec<usize>],
        quads: &'a [Vec<usize>],
        covered: Vec<bool>,
        chosen: Vec<usize>,
        visit: F,
    }

    impl<F: FnMut(&[usize]) -> bool> Search<'_, F> {
        fn fits(&self, f: usize) -> bool {
            self.quads[f].iter().all(|&v| !self.covered[v])
        }

        // returns false once the visitor asks to stop
        fn run(&mut self) -> bool {
            let mut best: Option<(usize, usize)> = None;
            for v in 0..self.covered.len() {
                if self.covered[v] {
                    continue;
                }
                let live = self.options_at[v].iter().filter(|&&f| self.fits(f)).count();
                if best.is_none_or(|(_, b)| live < b) {
                    best = Some((v, live));
                }
                if live == 0 {
                    break;
                }
            }
            let Some((v, _)) = best else {
                let mut chosen = self.chosen.clone();
                chosen.sort_unstable();
                return (self.visit)(&chosen);
            };
            for i in 0..self.options_at[v].len() {
                let f = self.options_at[v][i];
                if !self.fits(f) {
                    continue;
                }
                for &u in &self.quads[f] {
                    self.covered[u] = true;
                }
                self.chosen.push(f);
                let go_on = self.run();
                self.chosen.pop();
                for &u in &self.quads[f] {
                    self.covered[u] = false;
                }
                if !go_on {
                    return false;
                }
            }
            true
        }
    }

    let mut search = Search {
        options_at: &options_at,
        quads: &quads,
        covered: vec![false; n],
        chosen: Vec::new(),
        visit: &mut visit,
    };
    search.run();
}

/// A 2-factor made of facial 4-cycles, as a sorted list of face ids.
pub fn find_quad_factor(graph: &PlanarGraph) -> Option<Vec<usize>> {
    let mut found = None;
    search_quad_factors(graph, |faces| {
        found = Some(faces.to_vec());
        false
    });
    found
}

fn odd_cycle(graph: &PlanarGraph) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    side[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for w in graph.neighbors(u) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[u];
                parent[w] = u;
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            } else if side[w] == side[u] {
                let (mut a, mut b) = (u, w);
                let (mut left, mut right) = (vec![a], vec![b]);
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                left.extend(right.into_iter().rev());
                return Some(left);
            }
        }
    }
    None
}

/// Structural flags of a plane graph with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub is_cubic: bool,
    pub is_bipartite: bool,
    pub is_3_connected: bool,
    pub is_plane: bool,
    pub has_4face_2factor: bool,
    pub is_triangulation: bool,
    pub is_eulerian: bool,
    pub is_e4: bool,
    pub odd_cycle: Option<Vec<usize>>,
    pub small_cut: Option<Vec<usize>>,
    pub quad_factor: Option<Vec<usize>>,
    pub degree4_class: Option<Vec<usize>>,
}

pub fn classify(graph: &PlanarGraph) -> ClassReport {
    let odd = odd_cycle(graph);
    let cut = find_small_cut(graph, 3);
    let is_cubic = graph.vertices().all(|v| graph.degree(v) == 3);
    let quad_factor = if is_cubic { find_quad_factor(graph) } else { None };
    let is_triangulation = graph.is_triangulation();
    let is_eulerian = graph.vertices().all(|v| graph.degree(v).is_multiple_of(2));
    let degree4_class = if is_triangulation && is_eulerian {
        e4_colouring(graph).ok().map(|c| c.class(Colour::Red))
    } else {
        None
    };
    ClassReport {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        faces: graph.faces().len(),
        is_cubic,
        is_bipartite: odd.is_none(),
        is_3_connected: graph.vertex_count() > 3 && cut.is_none(),
        is_plane: true,
        has_4face_2factor: quad_factor.is_some(),
        is_triangulation,
        is_eulerian,
        is_e4: degree4_class.is_some(),
        odd_cycle: odd,
        small_cut: cut,
        quad_factor,
        degree4_class,
    }
}

fn write_ids(f: &mut fmt::Formatter<'_>, key: &str, ids: &Option<Vec<usize>>) -> fmt::Result {
    write!(f, "{key}=")?;
    match ids {
        None => write!(f, "-")?,
        Some(ids) => {
            let text: Vec<String> = ids.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, "{}", text.join(","))?;
        }
    }
    writeln!(f)
}

impl fmt::Display for ClassReport {
    /// Stable `key=value` block; ids are 1-based (faces in trace order).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices={}", self.vertices)?;
        writeln!(f, "edges={}", self.edges)?;
        writeln!(f, "faces={}", self.faces)?;
        writeln!(f, "is_cubic={}", self.is_cubic)?;
        writeln!(f, "is_bipartite={}", self.is_bipartite)?;
        writeln!(f, "is_3_connected={}", self.is_3_connected)?;
        writeln!(f, "is_plane={}", self.is_plane)?;
        writeln!(f, "has_4face_2factor={}", self.has_4face_2factor)?;
        writeln!(f, "is_triangulation={}", self.is_triangulation)?;
        writeln!(f, "is_eulerian={}", self.is_eulerian)?;
        writeln!(f, "is_e4={}", self.is_e4)?;
        write_ids(f, "odd_cycle", &self.odd_cycle)?;
        write_ids(f, "small_cut", &self.small_cut)?;
        write_ids(f, "quad_factor", &self.quad_factor)?;
        write_ids(f, "degree4_class", &self.degree4_class)
    }
}

/// `classify(dual).has_4face_2factor` for a triangulation, or `None` when the
/// dual is not simple.
pub fn dual_has_quad_factor(graph: &PlanarGraph) -> Option<bool> {
    dual_graph(graph).ok().map(|(d, _)| classify(&d).has_4face_2factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solids;

    #[test]
    fn octahedron_classes_are_antipodal_pairs() {
        let g = solids::octahedron();
        let p = three_colour(&g).unwrap();
        assert_eq!(p.sizes(), [2, 2, 2]);
        assert_eq!(p.members(0), vec![0, 1]);
        assert_eq!(p.members(1), vec![2, 3]);
        assert_eq!(p.members(2), vec![4, 5]);
        assert_eq!(red_class(&g, &p), Ok(0));
    }

    #[test]
    fn icosahedron_is_not_three_colourable() {
        assert!(matches!(
            three_colour(&solids::icosahedron()),
            Err(ColourError::NotThreeColourable { .. })
        ));
    }

    #[test]
    fn non_triangulations_are_rejected() {
        assert_eq!(three_colour(&solids::cube()), Err(ColourError::NotTriangulation));
    }

    #[test]
    fn colouring_does_not_depend_on_seed_face() {
        let g = solids::octahedron();
        let reference = three_colour(&g).unwrap();
        for f in 0..g.faces().len() {
            assert_eq!(three_colour_from(&g, f).unwrap(), reference);
        }
    }

    #[test]
    fn canonical_names() {
        let g = solids::octahedron();
        let c = e4_colouring(&g).unwrap();
        assert_eq!(c.class(Colour::Red), vec![0, 1]);
        assert_eq!(c.class(Colour::Black), vec![2, 3]);
        assert_eq!(c.class(Colour::White), vec![4, 5]);
        c.validate(&g).unwrap();
        assert_eq!(c.to_string(), "B: 3 4\nW: 5 6\nR: 1 2\n");
    }

    #[test]
    fn validate_catches_bad_colourings() {
        let g = solids::octahedron();
        let mut colours = e4_colouring(&g).unwrap().colours().to_vec();
        colours.swap(0, 2);
        assert!(TriColouring::new(colours).validate(&g).is_err());
    }

    #[test]
    fn cube_report() {
        let r = classify(&solids::cube());
        assert!(r.is_cubic && r.is_bipartite && r.is_3_connected && r.has_4face_2factor);
        assert!(!r.is_triangulation && !r.is_e4);
        assert_eq!(r.quad_factor.as_ref().map(Vec::len), Some(2));
    }

    #[test]
    fn octahedron_report() {
        let r = classify(&solids::octahedron());
        assert!(r.is_triangulation && r.is_eulerian && r.is_e4);
        assert!(!r.is_cubic && !r.is_bipartite);
        assert!(r.is_3_connected);
        assert!(r.odd_cycle.as_ref().unwrap().len() % 2 == 1);
    }

    #[test]
    fn dodecahedron_report() {
        let r = classify(&solids::dodecahedron());
        assert!(r.is_cubic && !r.is_bipartite && !r.has_4face_2factor);
        let cycle = r.odd_cycle.unwrap();
        assert_eq!(cycle.len() % 2, 1);
        let g = solids::dodecahedron();
        for i in 0..cycle.len() {
            assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn glued_tetrahedra_report_cut() {
        let r = classify(&solids::triangular_bipyramid());
        assert!(r.is_triangulation && !r.is_eulerian && !r.is_e4);
        assert!(r.is_3_connected);
    }

    #[test]
    fn hexagonal_prism_has_two_quad_factors() {
        let mut count = 0;
        search_quad_factors(&solids::hexagonal_prism(), |_| {
            count += 1;
            true
        });
        assert_eq!(count, 2);
    }

    #[test]
    fn report_text_is_stable() {
        let text = classify(&solids::cube()).to_string();
        let keys: Vec<&str> = text.lines().map(|l| l.split('=').next().unwrap()).collect();
        assert_eq!(
            keys,
            [
                "vertices",
                "edges",
                "faces",
                "is_cubic",
                "is_bipartite",
                "is_3_connected",
                "is_plane",
                "has_4face_2factor",
                "is_triangulation",
                "is_eulerian",
                "is_e4",
                "odd_cycle",
                "small_cut",
                "quad_factor",
                "degree4_class"
            ]
        );
        assert!(text.contains("is_cubic=true\n"));
        assert!(text.contains("small_cut=-\n"));
    }

    #[test]
    fn duality_consistency_on_solids() {
        for g in [
            solids::octahedron(),
            solids::icosahedron(),
            solids::triangular_bipyramid(),
        ] {
            assert_eq!(dual_has_quad_factor(&g), Some(classify(&g).is_e4));
        }
    }
}
