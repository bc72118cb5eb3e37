use graph_core::{bfs_avoiding, components, r_dominates, Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::FrameworkError;

/// Result of [`connect_dominator`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connection {
    /// The added vertices `Q`; `G[D ∪ Q]` is connected.
    pub added: VertexSet,
    /// Number of components of `G[D]`.
    pub initial_components: usize,
    /// Number of components of `G[D ∪ Q]` after each merge round.
    pub rounds: Vec<usize>,
}

/// Makes `d` connected by adding at most `2r` vertices per component of `G[d]`.
///
/// `G[x]` must be connected and `d` must `r`-dominate `x`. Each round looks at
/// the components of `G[d ∪ Q]`:
/// * if some vertex `z` of `x` lies within distance `r` of two components, `z`
///   and shortest paths from it to the two nearest components join `Q`;
/// * otherwise every `x` vertex is near exactly one component, and the first
///   edge of `G[x]` whose ends are near different components is bridged by the
///   two shortest paths through it.
pub fn connect_dominator(g: &Graph, x: &VertexSet, d: &VertexSet, r: usize) -> Result<Connection, FrameworkError> {
    let n = g.n();
    if r == 0 {
        return Err(FrameworkError::InvalidInput("connector radius must be at least 1".into()));
    }
    if let Some(v) = x.iter().chain(d.iter()).copied().find(|&v| v >= n) {
        return Err(FrameworkError::InvalidInput(format!("vertex {v} is not in the graph")));
    }
    if !graph_core::is_connected(g, x) {
        return Err(FrameworkError::InvalidInput("the target set does not induce a connected subgraph".into()));
    }
    if !r_dominates(g, &d.to_vec(), x.iter(), r) {
        return Err(FrameworkError::InvalidInput(format!("the dominator does not {r}-dominate the target set")));
    }

    let xs = x.to_vec();
    let mut current = d.clone();
    let mut added = VertexSet::new();
    let mut rounds = Vec::new();
    let mut comps = components(g, &current.to_vec());
    let initial_components = comps.len();
    let no_avoid = vec![false; n];

    while comps.len() > 1 {
        let dist: Vec<Vec<Option<usize>>> = comps.iter().map(|c| bfs_avoiding(g, c, &no_avoid, Some(r))).collect();
        let near = |z: usize| -> Vec<(usize, usize)> {
            let mut v: Vec<(usize, usize)> =
                dist.iter().enumerate().filter_map(|(i, dc)| dc[z].map(|dz| (dz, i))).collect();
            v.sort_unstable();
            v
        };

        let mut new_vertices = Vec::new();
        if let Some((z, hits)) = xs.iter().map(|&z| (z, near(z))).find(|(_, h)| h.len() >= 2) {
            new_vertices.extend(path_to(g, &dist[hits[0].1], z));
            new_vertices.extend(path_to(g, &dist[hits[1].1], z));
        } else {
            let home = |z: usize| near(z).first().map(|&(_, c)| c);
            let bridge = xs.iter().find_map(|&z1| {
                g.neighbors(z1)
                    .iter()
                    .copied()
                    .filter(|&z2| z2 > z1 && x.contains(&z2))
                    .find(|&z2| home(z1) != home(z2))
                    .map(|z2| (z1, z2))
            });
            let Some((z1, z2)) = bridge else {
                return Err(FrameworkError::InvalidInput(
                    "some dominator component is farther than the radius from the target set".into(),
                ));
            };
            let (c1, c2) = (home(z1).expect("dominated"), home(z2).expect("dominated"));
            new_vertices.extend(path_to(g, &dist[c1], z1));
            new_vertices.extend(path_to(g, &dist[c2], z2));
        }
        for v in new_vertices {
            if current.insert(v) {
                added.insert(v);
            }
        }
        let next = components(g, &current.to_vec());
        debug_assert!(next.len() < comps.len(), "every round merges at least two components");
        rounds.push(next.len());
        comps = next;
    }
    Ok(Connection { added, initial_components, rounds })
}

/// Vertices of a shortest path from `z` towards a component, excluding the
/// component vertex itself. Walks to the smallest-id predecessor each step.
fn path_to(g: &Graph, dist: &[Option<usize>], z: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut v = z;
    let mut dv = dist[v].expect("z is within range of the component");
    while dv > 0 {
        out.push(v);
        v = g.neighbors(v).iter().copied().find(|&w| dist[w] == Some(dv - 1)).expect("BFS layers are contiguous");
        dv -= 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::generators;

    #[test]
    fn connected_dominator_needs_nothing() {
        let g = generators::path(4);
        let c = connect_dominator(&g, &VertexSet::full(4), &VertexSet::from([1, 2]), 1).unwrap();
        assert!(c.added.is_empty());
        assert!(c.rounds.is_empty());
    }

    #[test]
    fn path_of_three_adds_the_middle() {
        let g = generators::path(3);
        let c = connect_dominator(&g, &VertexSet::full(3), &VertexSet::from([0, 2]), 1).unwrap();
        assert_eq!(c.added, VertexSet::from([1]));
        assert_eq!(c.rounds, vec![1]);
    }

    #[test]
    fn antipodal_pair_on_c8_is_not_a_dominator() {
        let g = generators::cycle(8);
        let err = connect_dominator(&g, &VertexSet::full(8), &VertexSet::from([0, 4]), 1).unwrap_err();
        assert!(matches!(err, FrameworkError::InvalidInput(_)));
    }

    #[test]
    fn bridging_edge_when_no_vertex_sees_both() {
        // Dominators 1 and 4 on P_6: no vertex is adjacent to both, so edge 2-3 bridges.
        let g = generators::path(6);
        let c = connect_dominator(&g, &VertexSet::full(6), &VertexSet::from([1, 4]), 1).unwrap();
        assert_eq!(c.added, VertexSet::from([2, 3]));
    }

    #[test]
    fn radius_two_uses_paths() {
        let g = generators::path(9);
        let d = VertexSet::from([2, 6]);
        let c = connect_dominator(&g, &VertexSet::full(9), &d, 2).unwrap();
        assert_eq!(c.added, VertexSet::from([3, 4, 5]));
        assert!(c.added.len() <= 2 * 2 * 2);
    }
}
