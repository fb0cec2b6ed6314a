use petgraph::unionfind::UnionFind;

use crate::e4::{Colour, TriColouring};
use crate::planar::{mask_of, PlanarGraph};

use super::{check_bw_closed, ClosedPair, CoverPair, TreePairError};

/// Grows a closed pair `(C, D)` into a cover `(X, Y)` with `C ⊆ X`, `D ⊆ Y`.
///
/// Free black vertices join `X`, free white vertices join `Y`. Free red
/// vertices are then placed one at a time in ascending id order: into `Y` if
/// both black neighbours already lie in one component of `X`, into `X`
/// otherwise. (When both white neighbours share a component of `Y` the rule
/// already sends the vertex to `X`; the fallback also picks `X`.)
pub fn extend_cover(
    graph: &PlanarGraph,
    colouring: &TriColouring,
    pair: &ClosedPair,
) -> Result<CoverPair, TreePairError> {
    extend_cover_in_order(graph, colouring, pair, &[])
}

/// [`extend_cover`] with free red vertices visited in `red_order` first; any
/// free red vertices not listed follow in ascending order.
pub fn extend_cover_in_order(
    graph: &PlanarGraph,
    colouring: &TriColouring,
    pair: &ClosedPair,
    red_order: &[usize],
) -> Result<CoverPair, TreePairError> {
    let n = graph.vertex_count();
    let in_c = mask_of(n, pair.c.iter().copied());
    let in_d = mask_of(n, pair.d.iter().copied());
    let problems = (0..n).filter(|&v| in_c[v] && in_d[v]).count()
        + usize::from(!graph.induces_forest(&in_c))
        + usize::from(!graph.induces_forest(&in_d))
        + check_bw_closed(graph, colouring, pair).len();
    if problems > 0 {
        return Err(TreePairError::NotClosedInput(problems));
    }

    let mut in_x = in_c;
    let mut in_y = in_d;
    for v in graph.vertices() {
        if in_x[v] || in_y[v] {
            continue;
        }
        match colouring.colour(v) {
            Colour::Black => in_x[v] = true,
            Colour::White => in_y[v] = true,
            Colour::Red => {}
        }
    }

    let mut uf_x = UnionFind::<usize>::new(n);
    let mut uf_y = UnionFind::<usize>::new(n);
    for &(a, b) in graph.edges() {
        for (mask, uf) in [(&in_x, &mut uf_x), (&in_y, &mut uf_y)] {
            if mask[a] && mask[b] && !uf.union(a, b) {
                return Err(TreePairError::ExtensionFailure {
                    vertex: a.max(b),
                    stage: "black-white",
                });
            }
        }
    }

    let mut order: Vec<usize> = red_order.to_vec();
    order.extend(graph.vertices().filter(|v| !red_order.contains(v)));
    let mut placed = vec![false; n];
    for v in order {
        if placed[v] || in_x[v] || in_y[v] || !colouring.is(v, Colour::Red) {
            continue;
        }
        placed[v] = true;
        let blacks: Vec<usize> = graph.neighbors(v).filter(|&w| colouring.is(w, Colour::Black)).collect();
        let joined = |ws: &[usize], mask: &[bool], uf: &UnionFind<usize>| {
            ws.len() == 2 && mask[ws[0]] && mask[ws[1]] && uf.equiv(ws[0], ws[1])
        };
        let to_y = joined(&blacks, &in_x, &uf_x);
        let (mask, uf) = if to_y {
            (&mut in_y, &mut uf_y)
        } else {
            (&mut in_x, &mut uf_x)
        };
        mask[v] = true;
        for w in graph.neighbors(v) {
            if mask[w] && !uf.union(v, w) {
                return Err(TreePairError::ExtensionFailure {
                    vertex: v,
                    stage: "red",
                });
            }
        }
    }

    let x: Vec<usize> = (0..n).filter(|&v| in_x[v]).collect();
    let y: Vec<usize> = (0..n).filter(|&v| in_y[v]).collect();
    debug_assert_eq!(x.len() + y.len(), n);
    Ok(CoverPair {
        connected_x: graph.induces_tree(&in_x),
        connected_y: graph.induces_tree(&in_y),
        x,
        y,
    })
}
