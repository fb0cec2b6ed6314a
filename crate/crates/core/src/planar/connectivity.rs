use itertools::Itertools;

use super::PlanarGraph;

/// Whether the graph stays connected after deleting `removed`.
///
/// An empty remainder counts as connected.
pub fn is_connected_without(graph: &PlanarGraph, removed: &[usize]) -> bool {
    let n = graph.vertex_count();
    let mut blocked = vec![false; n];
    for &v in removed {
        blocked[v] = true;
    }
    let Some(start) = (0..n).find(|&v| !blocked[v]) else {
        return true;
    };
    let mut seen = blocked;
    seen[start] = true;
    let mut reached = 1;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for w in graph.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached + removed.len() == n
}

/// Smallest vertex cut with fewer than `k` vertices, found by exhaustive
/// enumeration of subsets in increasing size.
pub fn find_small_cut(graph: &PlanarGraph, k: usize) -> Option<Vec<usize>> {
    let n = graph.vertex_count();
    for size in 0..k.min(n.saturating_sub(1)) {
        for subset in (0..n).combinations(size) {
            if !is_connected_without(graph, &subset) {
                return Some(subset);
            }
        }
    }
    None
}

/// True iff the graph has more than `k` vertices and no vertex cut of size
/// below `k`. Cost grows as `n^(k-1)`; meant for `k <= 4` on small graphs.
pub fn vertex_connectivity_at_least(graph: &PlanarGraph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    graph.vertex_count() > k && find_small_cut(graph, k).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solids;

    #[test]
    fn octahedron_is_four_connected() {
        assert!(vertex_connectivity_at_least(&solids::octahedron(), 4));
        assert!(!vertex_connectivity_at_least(&solids::octahedron(), 5));
    }

    #[test]
    fn cube_is_exactly_three_connected() {
        let cube = solids::cube();
        assert!(vertex_connectivity_at_least(&cube, 3));
        assert!(!vertex_connectivity_at_least(&cube, 4));
        let cut = find_small_cut(&cube, 4).unwrap();
        assert_eq!(cut.len(), 3);
        assert!(!is_connected_without(&cube, &cut));
    }

    #[test]
    fn glued_tetrahedra_have_a_three_cut() {
        let g = solids::triangular_bipyramid();
        assert!(vertex_connectivity_at_least(&g, 3));
        assert!(!vertex_connectivity_at_least(&g, 4));
        assert_eq!(find_small_cut(&g, 4), Some(vec![0, 1, 2]));
    }

    #[test]
    fn complete_graph_convention() {
        // K4 is 3-connected but not 4-connected (needs more than k vertices).
        let k4 = solids::tetrahedron();
        assert!(vertex_connectivity_at_least(&k4, 3));
        assert!(!vertex_connectivity_at_least(&k4, 4));
    }
}
