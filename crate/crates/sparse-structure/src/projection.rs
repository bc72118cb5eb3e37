use std::collections::BTreeMap;

use graph_core::{bfs_avoiding, Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::SparseError;

/// `M_r(u, X)`: the vertices of `X` reachable from `u` by a path of length at
/// most `r` whose internal vertices avoid `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Projection {
    pub u: usize,
    pub x: VertexSet,
    pub m: VertexSet,
    pub r: usize,
}

/// Distance from `u` to each vertex of `A` along paths avoiding `A`
/// internally; `None` when that distance exceeds `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionProfile {
    pub u: usize,
    pub r: usize,
    pub rho: BTreeMap<usize, Option<usize>>,
}

impl ProjectionProfile {
    /// The finite part as sorted `(vertex, distance)` pairs.
    pub fn finite(&self) -> Vec<(usize, usize)> {
        self.rho.iter().filter_map(|(&v, &d)| d.map(|d| (v, d))).collect()
    }
}

fn avoiding_distances(g: &Graph, u: usize, x: &VertexSet, r: usize) -> Result<Vec<Option<usize>>, SparseError> {
    if u >= g.n() {
        return Err(SparseError::InvalidInput(format!("vertex {u} is not in the graph")));
    }
    if x.contains(&u) {
        return Err(SparseError::InvalidInput(format!("vertex {u} lies in the projected set")));
    }
    if let Some(v) = x.max_id().filter(|&v| v >= g.n()) {
        return Err(SparseError::InvalidInput(format!("vertex {v} is not in the graph")));
    }
    Ok(bfs_avoiding(g, &[u], &x.mask(g.n()), Some(r)))
}

pub fn projection(g: &Graph, u: usize, x: &VertexSet, r: usize) -> Result<Projection, SparseError> {
    let dist = avoiding_distances(g, u, x, r)?;
    let m = x.iter().copied().filter(|&v| dist[v].is_some()).collect();
    Ok(Projection { u, x: x.clone(), m, r })
}

pub fn profile(g: &Graph, u: usize, a: &VertexSet, r: usize) -> Result<ProjectionProfile, SparseError> {
    let dist = avoiding_distances(g, u, a, r)?;
    Ok(ProjectionProfile { u, r, rho: a.iter().map(|&v| (v, dist[v])).collect() })
}

/// Largest `|M_r(u, X)|` over `u ∉ X`, with a vertex attaining it.
pub fn max_projection_size(g: &Graph, x: &VertexSet, r: usize) -> Result<(usize, Option<usize>), SparseError> {
    let mut best = (0, None);
    for u in g.vertices().filter(|u| !x.contains(u)) {
        let size = projection(g, u, x, r)?.m.len();
        if size > best.0 {
            best = (size, Some(u));
        }
    }
    Ok(best)
}
