use std::collections::HashSet;

use graph_core::{Graph, VertexSet};
use oracles::group_steiner_dp;
use serde::{Deserialize, Serialize};

use crate::FrameworkError;

/// Work limits for group-subset enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkingCaps {
    /// Largest group subset solved on its own. Small group counts are handled
    /// by one table over all groups and are not limited by this.
    pub max_subset_size: usize,
    /// Largest number of group subsets solved in one call.
    pub max_evaluations: u64,
}

impl Default for MarkingCaps {
    fn default() -> Self {
        Self { max_subset_size: 14, max_evaluations: 2_000_000 }
    }
}

/// One marked tree and the group subset it was solved for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedTree {
    pub groups: Vec<usize>,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Marking {
    /// Union of all marked trees.
    pub marked: VertexSet,
    pub trees: Vec<MarkedTree>,
    /// Group subsets whose Steiner problem was solved.
    pub evaluated: u64,
    /// True if enumeration stopped because every vertex was already marked.
    pub stopped_early: bool,
}

/// Solves group Steiner tree for every subset of at most `max_groups` groups
/// and marks an optimal tree whenever it has at most `max_tree` vertices.
///
/// Subsets are visited by size. With few groups one dynamic program over all
/// of them answers every subset at once; otherwise each subset is solved on
/// its own, lexicographically within a size, and skipped when one of its
/// one-smaller subsets already needs a tree larger than `max_tree` (adding a
/// group never makes the optimum smaller, so it could not be marked anyway).
/// Enumeration stops once every vertex is marked, which leaves the union
/// unchanged.
pub fn mark_group_trees(
    g: &Graph,
    groups: &[Vec<usize>],
    max_groups: usize,
    max_tree: usize,
    caps: &MarkingCaps,
) -> Result<Marking, FrameworkError> {
    let n = g.n();
    for (i, grp) in groups.iter().enumerate() {
        if grp.is_empty() || grp.iter().any(|&v| v >= n) {
            return Err(FrameworkError::InvalidInput(format!("group {i} is empty or out of range")));
        }
    }
    let mut marking = Marking { marked: VertexSet::new(), trees: Vec::new(), evaluated: 0, stopped_early: false };
    if max_groups == 0 || max_tree == 0 {
        return Ok(marking);
    }

    // Single groups: the optimum is one vertex, the smallest member.
    let mut level: Vec<Vec<usize>> = Vec::new();
    for (i, grp) in groups.iter().enumerate() {
        let v = *grp.iter().min().expect("non-empty");
        marking.marked.insert(v);
        marking.trees.push(MarkedTree { groups: vec![i], vertices: vec![v] });
        level.push(vec![i]);
    }
    marking.evaluated = groups.len() as u64;
    if marking.marked.len() < n && use_single_table(groups.len(), max_groups) {
        mark_from_single_table(g, groups, max_groups, max_tree, &mut marking);
        return Ok(marking);
    }

    for size in 2..=max_groups {
        if marking.marked.len() == n {
            marking.stopped_early = true;
            break;
        }
        let candidates = extend(&level);
        if candidates.is_empty() {
            break;
        }
        if size > caps.max_subset_size {
            return Err(FrameworkError::CapExceeded {
                what: "groups per Steiner subset",
                value: size as u64,
                cap: caps.max_subset_size as u64,
            });
        }
        let total = marking.evaluated + candidates.len() as u64;
        if total > caps.max_evaluations {
            return Err(FrameworkError::CapExceeded { what: "group subsets", value: total, cap: caps.max_evaluations });
        }
        marking.evaluated = total;

        let full = (1u32 << size) - 1;
        let mut next = Vec::new();
        for q in candidates {
            let sub: Vec<Vec<usize>> = q.iter().map(|&i| groups[i].clone()).collect();
            let table = group_steiner_dp(g, &sub, None);
            match table.size(full) {
                Some(s) if s <= max_tree => {
                    let tree = table.tree(full).expect("feasible");
                    marking.marked.extend(tree.iter().copied());
                    marking.trees.push(MarkedTree { groups: q.clone(), vertices: tree });
                    next.push(q);
                }
                _ => {}
            }
        }
        level = next;
    }
    Ok(marking)
}

/// Largest group count for which one table over all groups is considered.
const SINGLE_TABLE_MAX_GROUPS: usize = 16;

/// One dynamic program over all groups costs about `3^G`; solving every
/// subset of at most `q` groups separately costs about `sum C(G, i) 3^i`.
fn use_single_table(groups: usize, max_groups: usize) -> bool {
    if !(2..=SINGLE_TABLE_MAX_GROUPS).contains(&groups) {
        return false;
    }
    let single = 3f64.powi(groups as i32);
    let mut separate = 0.0;
    let mut binom = 1.0;
    for i in 1..=max_groups.min(groups) {
        binom = binom * (groups + 1 - i) as f64 / i as f64;
        separate += binom * 3f64.powi(i as i32);
    }
    single <= separate
}

/// Reads every subset of two to `max_groups` groups off one table, by size
/// and then by mask order.
fn mark_from_single_table(g: &Graph, groups: &[Vec<usize>], max_groups: usize, max_tree: usize, marking: &mut Marking) {
    let table = group_steiner_dp(g, groups, None);
    let count = groups.len();
    for size in 2..=max_groups.min(count) {
        if marking.marked.len() == g.n() {
            marking.stopped_early = true;
            return;
        }
        for mask in (1u32..1 << count).filter(|m| m.count_ones() as usize == size) {
            marking.evaluated += 1;
            match table.size(mask) {
                Some(s) if s <= max_tree => {
                    let tree = table.tree(mask).expect("feasible");
                    marking.marked.extend(tree.iter().copied());
                    let members = (0..count).filter(|&i| mask >> i & 1 == 1).collect();
                    marking.trees.push(MarkedTree { groups: members, vertices: tree });
                }
                _ => {}
            }
        }
    }
}

/// Candidate subsets one larger than the sorted, lexicographically ordered
/// `level`, all of whose one-smaller subsets are in `level`.
fn extend(level: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let known: HashSet<&[usize]> = level.iter().map(|q| q.as_slice()).collect();
    let mut out = Vec::new();
    let mut start = 0;
    while start < level.len() {
        let prefix = &level[start][..level[start].len() - 1];
        let mut end = start + 1;
        while end < level.len() && &level[end][..prefix.len()] == prefix {
            end += 1;
        }
        for a in start..end {
            for b in a + 1..end {
                let mut cand = level[a].clone();
                cand.push(*level[b].last().expect("non-empty"));
                let all_known = (0..cand.len() - 2).all(|drop| {
                    let sub: Vec<usize> =
                        cand.iter().enumerate().filter(|&(i, _)| i != drop).map(|(_, &v)| v).collect();
                    known.contains(sub.as_slice())
                });
                if all_known {
                    out.push(cand);
                }
            }
        }
        start = end;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::generators;

    #[test]
    fn extension_is_lexicographic_and_pruned() {
        let level = vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![2, 3]];
        assert_eq!(extend(&level), vec![vec![0, 1, 2], vec![0, 2, 3]]);
    }

    #[test]
    fn path_marks_short_subpaths_only() {
        let g = generators::path(6);
        let groups: Vec<Vec<usize>> = (0..6).map(|v| vec![v]).collect();
        let m = mark_group_trees(&g, &groups, 2, 2, &MarkingCaps::default()).unwrap();
        assert_eq!(m.marked, VertexSet::full(6));
        assert!(m.stopped_early);
        assert_eq!(m.evaluated, 6);

        // A bare pair of far endpoints is not marked.
        let groups = vec![vec![0], vec![5]];
        let m = mark_group_trees(&g, &groups, 2, 4, &MarkingCaps::default()).unwrap();
        assert_eq!(m.marked, VertexSet::from([0, 5]));
        assert_eq!(m.evaluated, 3);
    }

    #[test]
    fn size_cap_is_reported() {
        let g = generators::complete(5);
        let caps = MarkingCaps { max_subset_size: 1, max_evaluations: 100 };
        let singletons: Vec<Vec<usize>> = (0..5).map(|v| vec![v]).collect();
        // Every vertex is marked after the singletons, so no cap is hit.
        assert!(mark_group_trees(&g, &singletons, 4, 4, &caps).is_ok());
        // Twenty groups are too many for one table, so subsets are solved one by one.
        let g = generators::path(40);
        let pairs: Vec<Vec<usize>> = (0..20).map(|i| vec![2 * i, 2 * i + 1]).collect();
        let err = mark_group_trees(&g, &pairs, 3, 4, &caps).unwrap_err();
        assert!(err.is_cap());
    }
}
