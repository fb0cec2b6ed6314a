use std::collections::HashSet;

use super::{GraphError, PlanarGraph};

/// Bijections between a plane graph and its dual: faces of the primal are
/// vertices of the dual, and each primal edge `e` crosses exactly one dual
/// edge `e*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCorrespondence {
    vertex_of_face: Vec<usize>,
    face_of_vertex: Vec<usize>,
    dual_edge: Vec<usize>,
    primal_edge: Vec<usize>,
}

impl DualCorrespondence {
    /// Dual vertex standing for primal face `f`.
    pub fn dual_vertex(&self, face: usize) -> usize {
        self.vertex_of_face[face]
    }

    /// Primal face represented by dual vertex `v`.
    pub fn primal_face(&self, dual_vertex: usize) -> usize {
        self.face_of_vertex[dual_vertex]
    }

    pub fn dual_edge(&self, primal_edge: usize) -> usize {
        self.dual_edge[primal_edge]
    }

    pub fn primal_edge(&self, dual_edge: usize) -> usize {
        self.primal_edge[dual_edge]
    }

    /// The same duality seen from the other side: the dual becomes the primal.
    ///
    /// Each face of `dual` winds around exactly one vertex of `primal`; that
    /// vertex is the common endpoint of the primal edges crossed by the face
    /// boundary.
    pub fn flipped(&self, primal: &PlanarGraph, dual: &PlanarGraph) -> DualCorrespondence {
        let faces = dual.faces();
        let mut vertex_of_face = Vec::with_capacity(faces.len());
        for f in 0..faces.len() {
            let crossed: Vec<(usize, usize)> = dual
                .face_edges(f)
                .into_iter()
                .map(|de| primal.edge(self.primal_edge[de]))
                .collect();
            let (a, b) = crossed[0];
            let center = if crossed[1..].iter().all(|&(u, v)| u == a || v == a) {
                a
            } else {
                b
            };
            vertex_of_face.push(center);
        }
        let mut face_of_vertex = vec![usize::MAX; vertex_of_face.len()];
        for (f, &v) in vertex_of_face.iter().enumerate() {
            face_of_vertex[v] = f;
        }
        DualCorrespondence {
            vertex_of_face,
            face_of_vertex,
            dual_edge: self.primal_edge.clone(),
            primal_edge: self.dual_edge.clone(),
        }
    }
}

/// Builds the dual graph: one vertex per face, with rotation following the
/// face boundary. Fails when the dual would have a loop (a bridge in the
/// primal) or a parallel pair (two faces sharing two edges).
pub fn dual_graph(graph: &PlanarGraph) -> Result<(PlanarGraph, DualCorrespondence), GraphError> {
    let faces = graph.faces();
    let mut seen_pairs = HashSet::new();
    for e in 0..graph.edge_count() {
        let (a, b) = graph.faces_of_edge(e);
        let (u, v) = graph.edge(e);
        if a == b {
            return Err(GraphError::DualNotSimple(format!(
                "edge {u}-{v} has the same face on both sides"
            )));
        }
        if !seen_pairs.insert((a.min(b), a.max(b))) {
            return Err(GraphError::DualNotSimple(format!(
                "faces {a} and {b} share more than one edge"
            )));
        }
    }

    let rotation: Vec<Vec<usize>> = (0..faces.len())
        .map(|f| {
            faces
                .darts(f)
                .iter()
                .rev()
                .map(|&d| faces.face_of_dart(graph.twin(d)))
                .collect()
        })
        .collect();
    let dual = PlanarGraph::from_rotation(rotation)?;

    let mut dual_edge = Vec::with_capacity(graph.edge_count());
    for e in 0..graph.edge_count() {
        let (a, b) = graph.faces_of_edge(e);
        dual_edge.push(dual.edge_id(a, b).expect("dual edge exists by construction"));
    }
    let mut primal_edge = vec![0; dual_edge.len()];
    for (e, &de) in dual_edge.iter().enumerate() {
        primal_edge[de] = e;
    }
    let identity: Vec<usize> = (0..faces.len()).collect();
    let corr = DualCorrespondence {
        vertex_of_face: identity.clone(),
        face_of_vertex: identity,
        dual_edge,
        primal_edge,
    };
    Ok((dual, corr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solids;

    #[test]
    fn octahedron_dual_is_cube() {
        let (cube, _) = dual_graph(&solids::octahedron()).unwrap();
        assert_eq!(cube.vertex_count(), 8);
        assert_eq!(cube.edge_count(), 12);
        assert!(cube.vertices().all(|v| cube.degree(v) == 3));
        assert!(cube.faces().iter().all(|f| f.len() == 4));
    }

    #[test]
    fn cube_dual_is_octahedron() {
        let (oct, _) = dual_graph(&solids::cube()).unwrap();
        assert_eq!(oct.vertex_count(), 6);
        assert!(oct.vertices().all(|v| oct.degree(v) == 4));
        assert!(oct.is_triangulation());
    }

    #[test]
    fn bridge_gives_non_simple_dual() {
        let path = PlanarGraph::from_rotation(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert!(matches!(dual_graph(&path), Err(GraphError::DualNotSimple(_))));
    }

    #[test]
    fn shared_pair_of_edges_gives_non_simple_dual() {
        // A 4-cycle: its two faces share all four edges.
        let c4 = PlanarGraph::from_rotation(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
        assert!(matches!(dual_graph(&c4), Err(GraphError::DualNotSimple(_))));
    }

    #[test]
    fn double_dual_recovers_the_graph() {
        for g in [
            solids::octahedron(),
            solids::cube(),
            solids::icosahedron(),
            solids::tetrahedron(),
            solids::hexagonal_prism(),
        ] {
            let (d, corr) = dual_graph(&g).unwrap();
            let (dd, corr2) = dual_graph(&d).unwrap();
            let back = corr.flipped(&g, &d);
            // vertex v of g is face back.primal_face(v) of d, i.e. vertex of dd
            let to_dd = |v: usize| corr2.dual_vertex(back.primal_face(v));
            assert_eq!(dd.vertex_count(), g.vertex_count());
            assert_eq!(dd.edge_count(), g.edge_count());
            for &(u, v) in g.edges() {
                assert!(dd.has_edge(to_dd(u), to_dd(v)));
            }
            // flipping twice is the identity
            assert_eq!(back.flipped(&d, &g), corr);
        }
    }
}
