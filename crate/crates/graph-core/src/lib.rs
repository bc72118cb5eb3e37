//! Graph representation and the traversal primitives shared by every kernel.
//!
//! Vertices are dense ids `0..n`. A [`Graph`] is immutable once built and keeps
//! sorted adjacency lists, so membership tests are binary searches.

mod biclique;
mod error;
pub mod generators;
mod graph;
mod io;
mod transform;
mod traversal;
mod vertex_set;

pub use biclique::{contains_biclique, find_biclique};
pub use error::GraphError;
pub use graph::Graph;
pub use io::{parse_edge_list, DEFAULT_MAX_VERTICES};
pub use transform::{exact_subdivision, induced_subgraph, lexicographic_product, SubdivisionSpec};
pub use traversal::{
    bfs_avoiding, bfs_distances, components, degeneracy, dominated_by, is_connected, is_connected_slice, r_dominates,
};
pub use vertex_set::VertexSet;

pub type Vertex = usize;
