use framework::FrameworkError;
use graph_core::{bfs_avoiding, Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::ProfileClasses;

/// `G'` plus, for every class, a copy of a shortest-path tree from its
/// anchor to its members with each edge replaced by a path of length `2r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DotGraph {
    pub graph: Graph,
    /// Per class: the anchor `x_κ`, the closest vertex of its projection
    /// (smallest id among the closest).
    pub anchors: Vec<usize>,
    /// Per class: the copy of the anchor.
    pub roots: Vec<usize>,
    /// Per class: distance from the root to each member, `2r` times the
    /// anchor's distance.
    pub depths: Vec<usize>,
}

/// Builds the dot graph over `g` for the given member lists. Every list must
/// be non-empty, avoid `x`, and share one profile with a non-empty projection.
/// Members become the leaves of their class tree; all other tree vertices are
/// fresh copies.
pub fn build_dot_graph(g: &Graph, x: &VertexSet, classes: &[Vec<usize>], r: usize) -> Result<DotGraph, FrameworkError> {
    let profiles = ProfileClasses::compute(g, x, r)?;
    let class_of = profiles.class_of(g.n());
    let inside = x.mask(g.n());
    let mut edges = g.edges();
    let mut next = g.n();
    let mut out = DotGraph { graph: Graph::empty(0), anchors: Vec::new(), roots: Vec::new(), depths: Vec::new() };
    for (i, members) in classes.iter().enumerate() {
        let first = *members.first().ok_or_else(|| FrameworkError::InvalidInput(format!("class {i} is empty")))?;
        let ci = members
            .iter()
            .map(|&u| class_of.get(u).copied().flatten())
            .reduce(|a, b| if a == b { a } else { None })
            .flatten()
            .ok_or_else(|| FrameworkError::InvalidInput(format!("class {i} does not share one profile outside X")))?;
        debug_assert_eq!(class_of[first], Some(ci));
        let &(anchor, rho) = profiles.classes[ci]
            .profile
            .iter()
            .min_by_key(|&&(v, d)| (d, v))
            .ok_or_else(|| FrameworkError::InvalidInput(format!("class {i} has an empty projection")))?;

        let dist = bfs_avoiding(g, &[anchor], &inside, Some(rho));
        // parent[v] for every tree vertex other than the anchor.
        let mut tree: Vec<(usize, usize)> = Vec::new();
        let mut seen = VertexSet::new();
        for &u in members {
            let mut cur = u;
            while cur != anchor && seen.insert(cur) {
                let d = dist[cur].expect("members are within the anchor's distance");
                let parent = *g
                    .neighbors(cur)
                    .iter()
                    .filter(|&&w| dist[w] == Some(d - 1) && (w == anchor || !inside[w]))
                    .min()
                    .expect("a BFS vertex has a predecessor");
                tree.push((parent, cur));
                cur = parent;
            }
        }
        let mut copy = std::collections::BTreeMap::new();
        let mut id_of = |v: usize, next: &mut usize| -> usize {
            if members.contains(&v) {
                return v;
            }
            *copy.entry(v).or_insert_with(|| {
                *next += 1;
                *next - 1
            })
        };
        let root = id_of(anchor, &mut next);
        for (p, c) in tree {
            let (a, b) = (id_of(p, &mut next), id_of(c, &mut next));
            let mut prev = a;
            for _ in 1..2 * r {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, b));
        }
        out.anchors.push(anchor);
        out.roots.push(root);
        out.depths.push(2 * r * rho);
    }
    out.graph = Graph::from_edges(next, edges)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_member_gets_one_subdivided_path() {
        // x - a - u with X = {x}: rho = 2, so the copy is a path of 2 * 2r edges.
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let dot = build_dot_graph(&g, &VertexSet::from([0]), &[vec![2]], 2).unwrap();
        assert_eq!(dot.anchors, vec![0]);
        assert_eq!(dot.depths, vec![8]);
        assert_eq!(dot.graph.n(), 3 + 8);
        let d = bfs_avoiding(&dot.graph, &[dot.roots[0]], &[], None);
        assert_eq!(d[2], Some(8));
    }
}
