//! Hamilton cycles in cubic bipartite plane graphs that carry a 2-factor of
//! facial quadrilaterals.
//!
//! Everything is done on the dual side. The dual of such a graph is an
//! Eulerian triangulation whose proper 3-colouring has one class made only of
//! degree-4 vertices. Partitions of its vertices into two induced trees
//! correspond to Hamilton cycles of the cubic graph (the cut edges, dualised).
//! The crate builds those partitions constructively, grows instances from the
//! octahedron, and checks the results against brute-force enumeration.

pub mod alpha;
pub mod e4;
pub mod oracle;
pub mod planar;
pub mod solids;
pub mod stein;
pub mod tree_pair;

pub use planar::{dual_graph, DualCorrespondence, FaceSet, GraphError, PlanarGraph};
