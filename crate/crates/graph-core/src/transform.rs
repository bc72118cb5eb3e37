use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `G[s]` with vertices renumbered `0..|s|` in increasing original id. The
/// returned map sends each new id to its original id.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
    if let Some(v) = s.max_id().filter(|&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let map = s.to_vec();
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        new_id[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in map.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = new_id[w];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
    }
    Ok((Graph::from_edges(map.len(), edges)?, map))
}

/// A base graph together with a subdivision length.
#[derive(Debug, Clone)]
pub struct SubdivisionSpec {
    pub base: Graph,
    pub p: usize,
}

impl SubdivisionSpec {
    pub fn new(base: Graph, p: usize) -> Result<Self, GraphError> {
        if p == 0 {
            return Err(GraphError::InvalidParameter("subdivision length must be at least 1".into()));
        }
        Ok(Self { base, p })
    }

    /// Ids of the `p - 1` internal vertices on the path replacing edge number
    /// `edge_index` of `base.edges()`, ordered from the smaller endpoint.
    pub fn internal_vertices(&self, edge_index: usize) -> std::ops::Range<usize> {
        let start = self.base.n() + edge_index * (self.p - 1);
        start..start + self.p - 1
    }
}

/// Replaces every edge by a path of length exactly `p`. Base vertices keep
/// their ids; see [`SubdivisionSpec::internal_vertices`] for the new ones.
pub fn exact_subdivision(spec: &SubdivisionSpec) -> Graph {
    let base = &spec.base;
    let edges = base.edges();
    let n = base.n() + (spec.p - 1) * edges.len();
    let mut out = Vec::with_capacity(spec.p * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        let mut prev = u;
        for w in spec.internal_vertices(i) {
            out.push((prev, w));
            prev = w;
        }
        out.push((prev, v));
    }
    Graph::from_edges(n, out).expect("subdivision of a simple graph is simple")
}

/// `G ⊙ K_t`: vertex `(u, a)` gets id `u * t + a`; `(u,a)(v,b)` is an edge iff
/// `uv ∈ E(G)`, or `u = v` and `a ≠ b`.
pub fn lexicographic_product(g: &Graph, t: usize) -> Result<Graph, GraphError> {
    if t == 0 {
        return Err(GraphError::InvalidParameter("lexicographic product needs t >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in g.vertices() {
        for a in 0..t {
            for b in a + 1..t {
                edges.push((u * t + a, u * t + b));
            }
        }
    }
    for (u, v) in g.edges() {
        for a in 0..t {
            for b in 0..t {
                edges.push((u * t + a, v * t + b));
            }
        }
    }
    Graph::from_edges(g.n() * t, edges)
}
