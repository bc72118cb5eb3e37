use std::collections::BTreeMap;

use framework::FrameworkError;
use graph_core::{bfs_avoiding, Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Vertices outside `X` sharing one `r`-projection profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileClass {
    /// Sorted `(x, distance)` pairs for the `x` within `X`-avoiding distance `r`.
    pub profile: Vec<(usize, usize)>,
    /// Sorted members.
    pub members: Vec<usize>,
}

/// The partition of `V(G) \ X` by `r`-projection profile on `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileClasses {
    pub x: VertexSet,
    pub r: usize,
    /// Ordered by profile.
    pub classes: Vec<ProfileClass>,
}

impl ProfileClasses {
    pub fn compute(g: &Graph, x: &VertexSet, r: usize) -> Result<Self, FrameworkError> {
        if r == 0 {
            return Err(FrameworkError::InvalidInput("radius must be at least 1".into()));
        }
        if let Some(v) = x.max_id().filter(|&v| v >= g.n()) {
            return Err(FrameworkError::InvalidInput(format!("vertex {v} is not in the graph")));
        }
        let inside = x.mask(g.n());
        let mut profiles: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
        for &a in x.iter() {
            for (u, d) in bfs_avoiding(g, &[a], &inside, Some(r)).into_iter().enumerate() {
                if let Some(d) = d.filter(|_| !inside[u]) {
                    profiles[u].push((a, d));
                }
            }
        }
        let mut by_profile: BTreeMap<Vec<(usize, usize)>, Vec<usize>> = BTreeMap::new();
        for u in g.vertices().filter(|&u| !inside[u]) {
            by_profile.entry(std::mem::take(&mut profiles[u])).or_default().push(u);
        }
        let classes = by_profile.into_iter().map(|(profile, members)| ProfileClass { profile, members }).collect();
        Ok(Self { x: x.clone(), r, classes })
    }

    /// Number of distinct profiles realized outside `X`.
    pub fn index(&self) -> usize {
        self.classes.len()
    }

    /// The singletons of `X` followed by the classes, as Steiner groups.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        self.x.iter().map(|&v| vec![v]).chain(self.classes.iter().map(|c| c.members.clone())).collect()
    }

    /// Class index of every vertex; `None` for vertices of `X`.
    pub fn class_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &u in &c.members {
                out[u] = Some(i);
            }
        }
        out
    }
}

/// Vertices of one shortest `X`-avoiding path from `u` to every vertex of `X`
/// within distance `r`. Each path steps back to the smallest-id neighbour one
/// level closer to `u`. Keeping these paths keeps the profile of `u`.
pub fn profile_paths(g: &Graph, x: &VertexSet, u: usize, r: usize) -> VertexSet {
    let inside = x.mask(g.n());
    let dist = bfs_avoiding(g, &[u], &inside, Some(r));
    let mut out = VertexSet::from([u]);
    for &a in x.iter() {
        let Some(mut d) = dist[a] else { continue };
        let mut cur = a;
        out.insert(cur);
        while d > 0 {
            cur = *g
                .neighbors(cur)
                .iter()
                .filter(|&&w| dist[w] == Some(d - 1) && (w == u || !inside[w]))
                .min()
                .expect("a BFS vertex has a predecessor");
            out.insert(cur);
            d -= 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::generators::{cycle, star};

    #[test]
    fn star_leaves_share_a_profile() {
        let g = star(4);
        let pc = ProfileClasses::compute(&g, &VertexSet::from([0]), 1).unwrap();
        assert_eq!(pc.classes, vec![ProfileClass { profile: vec![(0, 1)], members: vec![1, 2, 3, 4] }]);
        assert_eq!(pc.groups(), vec![vec![0], vec![1, 2, 3, 4]]);
    }

    #[test]
    fn paths_avoid_the_set() {
        let g = cycle(8);
        let x = VertexSet::from([0, 4]);
        let pc = ProfileClasses::compute(&g, &x, 2).unwrap();
        // 1 and 7 are at distance 1 from 0 and 3 from 4: beyond r.
        assert_eq!(pc.classes[0], ProfileClass { profile: vec![(0, 1)], members: vec![1, 7] });
        assert_eq!(pc.index(), 3);
        assert_eq!(profile_paths(&g, &x, 2, 2), VertexSet::from([0, 1, 2, 3, 4]));
        assert_eq!(profile_paths(&g, &x, 1, 2), VertexSet::from([0, 1]));
    }
}
