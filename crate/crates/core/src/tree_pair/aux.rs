use crate::e4::{Colour, TriColouring};
use crate::planar::PlanarGraph;

use super::TreePairError;

/// `G[B ∪ W]` plus an edge between every same-coloured pair at distance 2.
///
/// Indexed by the ids of `G`; red vertices are absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxGraph {
    members: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
    graph_order: usize,
    graph_max_degree: usize,
}

impl AuxGraph {
    /// Black and white vertices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.members
    }

    pub fn vertex_count(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.members.iter().map(|&v| self.adjacency[v].len()).max().unwrap_or(0)
    }

    /// `Δ(G)` of the triangulation the graph was built from.
    pub fn graph_max_degree(&self) -> usize {
        self.graph_max_degree
    }

    pub fn graph_order(&self) -> usize {
        self.graph_order
    }
}

/// Builds `J` and checks `Δ(J) < Δ(G)²/4`.
pub fn build_auxiliary_j(graph: &PlanarGraph, colouring: &TriColouring) -> Result<AuxGraph, TreePairError> {
    let n = graph.vertex_count();
    let members: Vec<usize> = graph.vertices().filter(|&v| !colouring.is(v, Colour::Red)).collect();
    let mut adjacency = vec![Vec::new(); n];
    for &v in &members {
        let own = colouring.colour(v);
        let mut nbrs = Vec::new();
        for w in graph.neighbors(v) {
            if !colouring.is(w, Colour::Red) {
                nbrs.push(w);
            }
            for z in graph.neighbors(w) {
                if z != v && colouring.colour(z) == own {
                    nbrs.push(z);
                }
            }
        }
        nbrs.sort_unstable();
        nbrs.dedup();
        adjacency[v] = nbrs;
    }
    let aux = AuxGraph {
        members,
        adjacency,
        graph_order: n,
        graph_max_degree: graph.max_degree(),
    };
    let (dj, dg) = (aux.max_degree(), aux.graph_max_degree);
    if 4 * dj >= dg * dg {
        return Err(TreePairError::AuxDegreeBound {
            aux_max_degree: dj,
            graph_max_degree: dg,
        });
    }
    Ok(aux)
}

/// Greedy colouring of `J` and its largest colour class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub members: Vec<usize>,
    pub colours_used: usize,
    pub class_sizes: Vec<usize>,
}

/// Colours `J` greedily in ascending id order and keeps the largest class
/// (lowest colour index on ties). Checks `#colours <= Δ(G)²/4` and
/// `|K| > 2|G|/Δ(G)²`.
pub fn greedy_chromatic_independent_set(aux: &AuxGraph) -> Result<IndependentSet, TreePairError> {
    let mut colour_of = vec![usize::MAX; aux.adjacency.len()];
    let mut class_sizes: Vec<usize> = Vec::new();
    for &v in &aux.members {
        let mut taken: Vec<usize> = aux.adjacency[v]
            .iter()
            .map(|&w| colour_of[w])
            .filter(|&c| c != usize::MAX)
            .collect();
        taken.sort_unstable();
        taken.dedup();
        let c = taken
            .iter()
            .enumerate()
            .find(|&(i, &c)| i != c)
            .map_or(taken.len(), |(i, _)| i);
        colour_of[v] = c;
        if c == class_sizes.len() {
            class_sizes.push(0);
        }
        class_sizes[c] += 1;
    }
    let colours_used = class_sizes.len();
    let best = (0..colours_used)
        .max_by_key(|&c| (class_sizes[c], std::cmp::Reverse(c)))
        .unwrap_or(0);
    let members: Vec<usize> = aux.members.iter().copied().filter(|&v| colour_of[v] == best).collect();

    let dg = aux.graph_max_degree;
    if 4 * colours_used > dg * dg {
        return Err(TreePairError::GreedyColourBound {
            colours: colours_used,
            graph_max_degree: dg,
        });
    }
    if members.len() * dg * dg <= 2 * aux.graph_order {
        return Err(TreePairError::IndependentSetBound {
            size: members.len(),
            bound: 2.0 * aux.graph_order as f64 / (dg * dg) as f64,
        });
    }
    Ok(IndependentSet {
        members,
        colours_used,
        class_sizes,
    })
}
