//! Small named plane graphs with fixed ids and clockwise rotations.

use crate::planar::{dual_graph, PlanarGraph};

fn build(rotation: &[&[usize]]) -> PlanarGraph {
    PlanarGraph::from_rotation(rotation.iter().map(|r| r.to_vec()).collect())
        .expect("built-in rotation table is a sphere embedding")
}

/// Octahedron with antipodal pairs `{0,1}`, `{2,3}`, `{4,5}`.
pub fn octahedron() -> PlanarGraph {
    build(&[
        &[2, 5, 3, 4],
        &[2, 4, 3, 5],
        &[0, 4, 1, 5],
        &[0, 5, 1, 4],
        &[0, 3, 1, 2],
        &[0, 2, 1, 3],
    ])
}

pub fn cube() -> PlanarGraph {
    build(&[
        &[1, 4, 2],
        &[0, 3, 5],
        &[0, 6, 3],
        &[1, 2, 7],
        &[0, 5, 6],
        &[1, 7, 4],
        &[2, 4, 7],
        &[3, 6, 5],
    ])
}

pub fn tetrahedron() -> PlanarGraph {
    build(&[&[1, 3, 2], &[0, 2, 3], &[0, 3, 1], &[0, 1, 2]])
}

pub fn icosahedron() -> PlanarGraph {
    build(&[
        &[1, 7, 5, 6, 2],
        &[0, 2, 8, 3, 7],
        &[0, 6, 4, 8, 1],
        &[1, 8, 9, 11, 7],
        &[2, 6, 10, 9, 8],
        &[0, 7, 11, 10, 6],
        &[0, 5, 10, 4, 2],
        &[0, 1, 3, 11, 5],
        &[1, 2, 4, 9, 3],
        &[3, 8, 4, 10, 11],
        &[4, 6, 5, 11, 9],
        &[3, 9, 10, 5, 7],
    ])
}

pub fn dodecahedron() -> PlanarGraph {
    dual_graph(&icosahedron()).expect("icosahedron has a simple dual").0
}

/// Two tetrahedra glued on the triangle `{0,1,2}`; apexes 3 and 4.
pub fn triangular_bipyramid() -> PlanarGraph {
    build(&[&[1, 4, 2, 3], &[0, 3, 2, 4], &[0, 4, 1, 3], &[0, 2, 1], &[0, 1, 2]])
}

/// Hexagonal prism: top ring `0..6`, bottom ring `6..12`.
pub fn hexagonal_prism() -> PlanarGraph {
    build(&[
        &[1, 6, 5],
        &[0, 2, 7],
        &[1, 3, 8],
        &[2, 4, 9],
        &[3, 5, 10],
        &[0, 11, 4],
        &[0, 7, 11],
        &[1, 8, 6],
        &[2, 9, 7],
        &[3, 10, 8],
        &[4, 11, 9],
        &[5, 6, 10],
    ])
}
