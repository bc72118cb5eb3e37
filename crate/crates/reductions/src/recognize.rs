use graph_core::{bfs_avoiding, Graph, VertexSet};

/// A simple graph whose exact `p`-subdivision is the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionBase {
    pub base: Graph,
    /// `branch[i]` is the input vertex playing base vertex `i`.
    pub branch: Vec<usize>,
}

/// Whether `g` is an exact `p`-subdivision of some simple graph.
pub fn membership_check_hp(g: &Graph, p: usize) -> bool {
    subdivision_base(g, p).is_some()
}

/// Recovers a base graph `H` with `g` equal to the exact `p`-subdivision of
/// `H`, if one exists.
///
/// Vertices of degree other than 2 must be base vertices. Along every maximal
/// chain of degree-2 vertices between two of them, base vertices sit at the
/// multiples of `p`. Components that are plain cycles get base vertices
/// every `p` steps from their smallest vertex. The base must come out without
/// loops or parallel edges.
pub fn subdivision_base(g: &Graph, p: usize) -> Option<SubdivisionBase> {
    if p == 0 {
        return None;
    }
    let n = g.n();
    if p == 1 {
        return Some(SubdivisionBase { base: g.clone(), branch: (0..n).collect() });
    }
    let mut is_branch: Vec<bool> = g.vertices().map(|v| g.degree(v) != 2).collect();
    let mut seen = is_branch.clone();

    // Chains hanging between forced base vertices.
    let forced: Vec<usize> = g.vertices().filter(|&v| is_branch[v]).collect();
    for b in forced {
        for &first in g.neighbors(b) {
            let chain = walk(g, &is_branch, b, first);
            if !(chain.len() + 1).is_multiple_of(p) {
                return None;
            }
            for (i, &v) in chain.iter().enumerate() {
                seen[v] = true;
                if (i + 1) % p == 0 {
                    is_branch[v] = true;
                }
            }
        }
    }

    // What is left are cycle components without any forced vertex.
    for v in g.vertices() {
        if seen[v] {
            continue;
        }
        let mut cycle = vec![v];
        let (mut prev, mut cur) = (v, g.neighbors(v)[0].min(g.neighbors(v)[1]));
        while cur != v {
            cycle.push(cur);
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree 2");
            (prev, cur) = (cur, next);
        }
        for &w in &cycle {
            seen[w] = true;
        }
        if cycle.len() % p != 0 || cycle.len() / p < 3 {
            return None;
        }
        for w in cycle.into_iter().step_by(p) {
            is_branch[w] = true;
        }
    }

    let branch: Vec<usize> = g.vertices().filter(|&v| is_branch[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in branch.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for &b in &branch {
        for &first in g.neighbors(b) {
            let chain = walk(g, &is_branch, b, first);
            if chain.len() + 1 != p {
                return None;
            }
            let end = end_of(g, &is_branch, b, first, &chain);
            if end == b {
                return None;
            }
            if b < end {
                edges.push((index[b], index[end]));
            }
        }
    }
    let m = edges.len();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != m {
        return None;
    }
    let base = Graph::from_edges(branch.len(), edges).ok()?;
    Some(SubdivisionBase { base, branch })
}

/// Base vertices (as indices into `sb.branch`) within distance `p - 1` of
/// some vertex of `d`, where `g` is the exact `p`-subdivision described by
/// `sb`.
///
/// For `p >= 2`, every interior vertex of a subdivided edge `ab` is `p`-dominated
/// only from vertices within distance `p - 1` of `a` or `b`. So for any
/// `p`-dominating set `d` the result is a vertex cover of the base graph, of
/// size at most `2|d|`.
pub fn touched_base_vertices(g: &Graph, sb: &SubdivisionBase, p: usize, d: &VertexSet) -> VertexSet {
    let reach = p.saturating_sub(1);
    let dist = bfs_avoiding(g, &d.to_vec(), &vec![false; g.n()], Some(reach));
    sb.branch.iter().enumerate().filter(|(_, &v)| dist[v].is_some()).map(|(i, _)| i).collect()
}

/// The degree-2 non-base vertices met walking from base vertex `b` through
/// `first`, in order.
fn walk(g: &Graph, is_branch: &[bool], b: usize, first: usize) -> Vec<usize> {
    let mut chain = Vec::new();
    let (mut prev, mut cur) = (b, first);
    while !is_branch[cur] {
        chain.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree 2");
        (prev, cur) = (cur, next);
    }
    chain
}

fn end_of(g: &Graph, is_branch: &[bool], b: usize, first: usize, chain: &[usize]) -> usize {
    match chain.last() {
        None => first,
        Some(&last) => {
            let before = if chain.len() >= 2 { chain[chain.len() - 2] } else { b };
            let end = g.neighbors(last).iter().copied().find(|&w| w != before).expect("degree 2");
            debug_assert!(is_branch[end]);
            end
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::generators::{complete, cycle, path, star};
    use graph_core::{exact_subdivision, SubdivisionSpec};

    #[test]
    fn cycle_of_six() {
        let c6 = cycle(6);
        assert!(membership_check_hp(&c6, 1));
        assert!(membership_check_hp(&c6, 2));
        // The bases would be a 2-cycle and a loop.
        assert!(!membership_check_hp(&c6, 3));
        assert!(!membership_check_hp(&c6, 6));
        assert_eq!(subdivision_base(&c6, 2).unwrap().base.m(), 3);
    }

    #[test]
    fn complete_four_is_not_subdivided() {
        assert!(!membership_check_hp(&complete(4), 2));
        assert!(membership_check_hp(&complete(4), 1));
    }

    #[test]
    fn paths_and_stars() {
        assert!(membership_check_hp(&path(7), 3));
        assert!(!membership_check_hp(&path(6), 3));
        assert!(!membership_check_hp(&star(3), 2));
        let s = exact_subdivision(&SubdivisionSpec::new(star(3), 2).unwrap());
        assert!(membership_check_hp(&s, 2));
    }

    #[test]
    fn isolated_vertices_are_base_vertices() {
        let b = subdivision_base(&Graph::empty(3), 4).unwrap();
        assert_eq!(b.branch, vec![0, 1, 2]);
    }
}
