//! Embedded graphs stored as rotation systems.
//!
//! A [`PlanarGraph`] keeps, for each vertex, the clockwise cyclic order of its
//! neighbours. Faces are never stored as primary data; they are traced from the
//! rotation once at construction and cached. Directed edges ("darts") are
//! numbered contiguously per vertex: dart `offset(u) + i` runs from `u` to
//! `rotation(u)[i]`.

mod connectivity;
mod dual;
mod rot1;

use std::collections::VecDeque;

use thiserror::Error;

pub use connectivity::{find_small_cut, is_connected_without, vertex_connectivity_at_least};
pub use dual::{dual_graph, DualCorrespondence};
pub use rot1::Rot1Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no edges")]
    Empty,
    #[error("vertex {vertex} lists neighbour {neighbour}, which is out of range")]
    InvalidVertex { vertex: usize, neighbour: usize },
    #[error("not simple: {0}")]
    NonSimple(String),
    #[error("edge {u}-{v} appears in the rotation of {u} but not of {v}")]
    NotSymmetric { u: usize, v: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("rotation system is not a sphere embedding: {vertices} - {edges} + {faces} != 2")]
    NotPlanarEmbedding {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("dual graph is not simple: {0}")]
    DualNotSimple(String),
    #[error("neighbourhood of vertex {vertex} does not induce its rotation cycle")]
    InducedCycleViolation { vertex: usize },
}

/// Boundary walks of all faces of an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<usize>>,
    face_of_dart: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Darts of face `f` in walking order.
    pub fn darts(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn face_len(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    pub fn max_face_len(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn face_of_dart(&self, dart: usize) -> usize {
        self.face_of_dart[dart]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.faces.iter().map(Vec::as_slice)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarGraph {
    rotation: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    dart_tail: Vec<usize>,
    twin: Vec<usize>,
    dart_edge: Vec<usize>,
    /// Undirected edges as `(min, max)`, sorted; the index is the edge id.
    edges: Vec<(usize, usize)>,
    faces: FaceSet,
}

impl PlanarGraph {
    /// Validates a rotation table (0-based ids, clockwise order) and builds the graph.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        for (v, nbrs) in rotation.iter().enumerate() {
            for (i, &w) in nbrs.iter().enumerate() {
                if w >= n {
                    return Err(GraphError::InvalidVertex {
                        vertex: v,
                        neighbour: w,
                    });
                }
                if w == v {
                    return Err(GraphError::NonSimple(format!("loop at vertex {v}")));
                }
                if nbrs[..i].contains(&w) {
                    return Err(GraphError::NonSimple(format!("parallel edges {v}-{w}")));
                }
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for nbrs in &rotation {
            offsets.push(offsets.last().unwrap() + nbrs.len());
        }
        let darts = offsets[n];
        if darts == 0 {
            return Err(GraphError::Empty);
        }

        let mut dart_tail = Vec::with_capacity(darts);
        for (v, nbrs) in rotation.iter().enumerate() {
            dart_tail.extend(std::iter::repeat_n(v, nbrs.len()));
        }

        let mut twin = vec![0; darts];
        for (u, nbrs) in rotation.iter().enumerate() {
            for (i, &v) in nbrs.iter().enumerate() {
                let j = rotation[v]
                    .iter()
                    .position(|&x| x == u)
                    .ok_or(GraphError::NotSymmetric { u, v })?;
                twin[offsets[u] + i] = offsets[v] + j;
            }
        }

        let mut edges: Vec<(usize, usize)> = (0..darts)
            .filter_map(|d| {
                let (u, v) = (dart_tail[d], dart_tail[twin[d]]);
                (u < v).then_some((u, v))
            })
            .collect();
        edges.sort_unstable();
        let dart_edge = (0..darts)
            .map(|d| {
                let (u, v) = (dart_tail[d], dart_tail[twin[d]]);
                edges.binary_search(&(u.min(v), u.max(v))).unwrap()
            })
            .collect();

        let mut graph = PlanarGraph {
            rotation,
            offsets,
            dart_tail,
            twin,
            dart_edge,
            edges,
            faces: FaceSet {
                faces: Vec::new(),
                face_of_dart: Vec::new(),
            },
        };

        if !connectivity::is_connected_without(&graph, &[]) {
            return Err(GraphError::NotConnected);
        }
        graph.faces = trace_faces(&graph);
        let (vertices, edges, faces) = (n, graph.edge_count(), graph.faces.len());
        if vertices + faces != edges + 2 {
            return Err(GraphError::NotPlanarEmbedding { vertices, edges, faces });
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    /// Clockwise neighbour order around `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation_table(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn dart_tail(&self, dart: usize) -> usize {
        self.dart_tail[dart]
    }

    pub fn dart_head(&self, dart: usize) -> usize {
        self.dart_tail[self.twin[dart]]
    }

    pub fn twin(&self, dart: usize) -> usize {
        self.twin[dart]
    }

    pub fn dart_edge(&self, dart: usize) -> usize {
        self.dart_edge[dart]
    }

    /// Dart running from `u` to `v`, if they are adjacent.
    pub fn dart(&self, u: usize, v: usize) -> Option<usize> {
        self.rotation[u]
            .iter()
            .position(|&w| w == v)
            .map(|i| self.offsets[u] + i)
    }

    /// The dart following `dart` on its face: at the head `v`, turn to the
    /// successor of the tail in `v`'s rotation.
    pub fn next_on_face(&self, dart: usize) -> usize {
        let back = self.twin[dart];
        let v = self.dart_tail[back];
        let j = back - self.offsets[v];
        self.offsets[v] + (j + 1) % self.rotation[v].len()
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    /// Vertices on the boundary of face `f`, in walking order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces.darts(f).iter().map(|&d| self.dart_tail[d]).collect()
    }

    /// Edge ids on the boundary of face `f`, in walking order.
    pub fn face_edges(&self, f: usize) -> Vec<usize> {
        self.faces.darts(f).iter().map(|&d| self.dart_edge[d]).collect()
    }

    /// The two faces on either side of an edge.
    pub fn faces_of_edge(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.edges[e];
        let d = self.dart(u, v).unwrap();
        (self.faces.face_of_dart(d), self.faces.face_of_dart(self.twin[d]))
    }

    pub fn is_triangulation(&self) -> bool {
        self.vertex_count() >= 4 && self.faces.iter().all(|f| f.len() == 3)
    }

    /// Breadth-first distances from `source`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn vertex_distance(&self, u: usize, v: usize) -> usize {
        self.distances_from(u)[v]
    }

    /// Length of a shortest sequence of faces from `f` to `h`.
    ///
    /// Shortest paths in the dual are induced paths, so plain dual BFS distance
    /// agrees with the sequence-of-faces definition.
    pub fn face_distance(&self, f: usize, h: usize) -> usize {
        self.face_distances_from(f)[h]
    }

    pub fn face_distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.faces.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(f) = queue.pop_front() {
            for &d in self.faces.darts(f) {
                let g = self.faces.face_of_dart(self.twin[d]);
                if dist[g] == usize::MAX {
                    dist[g] = dist[f] + 1;
                    queue.push_back(g);
                }
            }
        }
        dist
    }

    /// Rotation at `v`, checked to be an induced cycle of the graph.
    ///
    /// In a 4-connected triangulation the neighbours of every vertex induce
    /// exactly the cycle given by the rotation; a chord or a missing rim edge
    /// means the graph has a separating triangle (or is not a triangulation).
    pub fn neighbor_cycle(&self, v: usize) -> Result<&[usize], GraphError> {
        let cycle = self.rotation(v);
        let k = cycle.len();
        let violation = GraphError::InducedCycleViolation { vertex: v };
        if k < 3 {
            return Err(violation);
        }
        for i in 0..k {
            if !self.has_edge(cycle[i], cycle[(i + 1) % k]) {
                return Err(violation);
            }
        }
        let mut induced = 0;
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(cycle[i], cycle[j]) {
                    induced += 1;
                }
            }
        }
        if induced != k {
            return Err(violation);
        }
        Ok(cycle)
    }

    /// Induced subgraph on `members` is a forest.
    pub fn induces_forest(&self, members: &[bool]) -> bool {
        let (vertices, edges, components) = self.induced_counts(members);
        edges + components == vertices
    }

    /// Induced subgraph on `members` is a (non-empty) tree.
    pub fn induces_tree(&self, members: &[bool]) -> bool {
        let (vertices, edges, components) = self.induced_counts(members);
        components == 1 && edges + 1 == vertices
    }

    /// Number of connected components of the induced subgraph on `members`.
    pub fn induced_components(&self, members: &[bool]) -> usize {
        self.induced_counts(members).2
    }

    fn induced_counts(&self, members: &[bool]) -> (usize, usize, usize) {
        let vertices = members.iter().filter(|&&m| m).count();
        let edges = self.edges.iter().filter(|&&(u, v)| members[u] && members[v]).count();
        let mut seen = vec![false; members.len()];
        let mut components = 0;
        for s in self.vertices() {
            if !members[s] || seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if members[w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        (vertices, edges, components)
    }
}

/// Walks every dart's face orbit under [`PlanarGraph::next_on_face`].
pub fn trace_faces(graph: &PlanarGraph) -> FaceSet {
    let darts = graph.dart_count();
    let mut face_of_dart = vec![usize::MAX; darts];
    let mut faces = Vec::new();
    for start in 0..darts {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            face_of_dart[d] = id;
            walk.push(d);
            d = graph.next_on_face(d);
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }
    FaceSet { faces, face_of_dart }
}

/// Membership mask over `n` vertices.
pub fn mask_of(n: usize, members: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut mask = vec![false; n];
    for v in members {
        mask[v] = true;
    }
    mask
}
