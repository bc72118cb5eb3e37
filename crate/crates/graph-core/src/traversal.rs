use std::collections::{BTreeMap, VecDeque};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Multi-source BFS where vertices flagged in `avoid` may end a path but are
/// never expanded (so they are never internal). Sources are always expanded.
/// Entries beyond `cap` are `None`.
pub fn bfs_avoiding(g: &Graph, sources: &[usize], avoid: &[bool], cap: Option<usize>) -> Vec<Option<usize>> {
    let n = g.n();
    let mut dist = vec![None; n];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        if d > 0 && avoid.get(v).copied().unwrap_or(false) {
            continue;
        }
        if cap.is_some_and(|c| d >= c) {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Distances from `sources` along paths whose internal vertices avoid `avoid`.
/// Vertices farther than `cap` (or unreachable) are absent from the map.
pub fn bfs_distances(g: &Graph, sources: &VertexSet, avoid: &VertexSet, cap: Option<usize>) -> BTreeMap<usize, usize> {
    let src = sources.to_vec();
    let dist = bfs_avoiding(g, &src, &avoid.mask(g.n()), cap);
    dist.into_iter().enumerate().filter_map(|(v, d)| d.map(|d| (v, d))).collect()
}

/// Flags every vertex within distance `r` of `d`.
pub fn dominated_by(g: &Graph, d: &[usize], r: usize) -> Vec<bool> {
    bfs_avoiding(g, d, &[], Some(r)).into_iter().map(|x| x.is_some()).collect()
}

/// Whether every vertex of `targets` lies within distance `r` of `d`.
pub fn r_dominates<'a>(g: &Graph, d: &[usize], targets: impl IntoIterator<Item = &'a usize>, r: usize) -> bool {
    let covered = dominated_by(g, d, r);
    targets.into_iter().all(|&z| covered[z])
}

/// Connected components of `G[s]`, each sorted, ordered by smallest member.
pub fn components(g: &Graph, s: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in s {
        inside[v] = true;
    }
    let mut seen = vec![false; n];
    let mut order: Vec<usize> = s.to_vec();
    order.sort_unstable();
    order.dedup();
    let mut out = Vec::new();
    for &start in &order {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Whether `G[s]` has exactly one component. The empty set counts as connected.
pub fn is_connected(g: &Graph, s: &VertexSet) -> bool {
    is_connected_slice(g, &s.to_vec())
}

pub fn is_connected_slice(g: &Graph, s: &[usize]) -> bool {
    components(g, s).len() <= 1
}

/// Degeneracy and a removal order (repeatedly delete a minimum-degree vertex,
/// smallest id first).
pub fn degeneracy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        best = best.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    (best, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{path, star};

    fn set(v: &[usize]) -> VertexSet {
        v.into()
    }

    #[test]
    fn path_metric() {
        let g = path(3);
        let d = bfs_distances(&g, &set(&[0]), &set(&[]), None);
        assert_eq!(d, BTreeMap::from([(0, 0), (1, 1), (2, 2)]));
    }

    #[test]
    fn avoided_vertex_is_endpoint_only() {
        let g = path(3);
        let d = bfs_distances(&g, &set(&[0]), &set(&[1]), None);
        assert_eq!(d, BTreeMap::from([(0, 0), (1, 1)]));
    }

    #[test]
    fn cap_truncates() {
        let g = star(4);
        let d = bfs_distances(&g, &set(&[1]), &set(&[]), Some(1));
        assert_eq!(d, BTreeMap::from([(0, 1), (1, 0)]));
    }

    #[test]
    fn empty_sources_give_empty_map() {
        assert!(bfs_distances(&path(3), &set(&[]), &set(&[]), None).is_empty());
    }

    #[test]
    fn connectivity_examples() {
        let g = path(3);
        assert!(!is_connected(&g, &set(&[0, 2])));
        assert!(is_connected(&g, &set(&[0, 1, 2])));
        assert!(is_connected(&g, &set(&[2])));
        assert!(is_connected(&g, &set(&[])));
    }

    #[test]
    fn degeneracy_of_small_graphs() {
        assert_eq!(degeneracy(&path(5)).0, 1);
        assert_eq!(degeneracy(&crate::generators::complete(4)).0, 3);
        assert_eq!(degeneracy(&crate::generators::cycle(6)).0, 2);
    }
}
