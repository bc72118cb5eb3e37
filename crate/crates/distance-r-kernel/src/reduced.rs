use framework::{mark_group_trees, FrameworkError, MarkedTree, MarkingCaps};
use graph_core::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::{profile_paths, ProfileClasses};

/// The vertex set of the reduced graph `G'` and how it was assembled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedGraph {
    /// `V(G')`; the reduced graph is `G[keep]`.
    pub keep: VertexSet,
    pub classes: ProfileClasses,
    /// One vertex per (marked tree, class of that tree); their profiles are
    /// preserved in `G[keep]`.
    pub terminals: VertexSet,
    pub trees: Vec<MarkedTree>,
    pub subsets_evaluated: u64,
    pub stopped_early: bool,
}

/// Builds `G'` for the set `x`: `x` itself, an optimal group Steiner tree for
/// every set of at most `2t` groups (singletons of `x` and profile classes)
/// that can be joined by at most `2t` vertices, and for every tree and every
/// class it meets the smallest member in the tree (a terminal) together with
/// shortest `x`-avoiding paths to its projection.
///
/// Single classes always qualify, so every class keeps a member with its
/// profile.
pub fn build_reduced_graph(
    g: &Graph,
    x: &VertexSet,
    t: usize,
    r: usize,
    caps: &MarkingCaps,
) -> Result<ReducedGraph, FrameworkError> {
    if t == 0 {
        return Err(FrameworkError::InvalidInput("t must be at least 1".into()));
    }
    let classes = ProfileClasses::compute(g, x, r)?;
    let groups = classes.groups();
    let marking = mark_group_trees(g, &groups, 2 * t, 2 * t, caps)?;
    let mut keep = x.union(&marking.marked);
    let mut terminals = VertexSet::new();
    let offset = x.len();
    for tree in &marking.trees {
        for &gi in tree.groups.iter().filter(|&&gi| gi >= offset) {
            let members = &classes.classes[gi - offset].members;
            let u = *tree.vertices.iter().find(|v| members.binary_search(v).is_ok()).expect("tree meets its groups");
            terminals.insert(u);
        }
    }
    for &u in terminals.iter() {
        keep.extend(profile_paths(g, x, u, r));
    }
    Ok(ReducedGraph {
        keep,
        classes,
        terminals,
        trees: marking.trees,
        subsets_evaluated: marking.evaluated,
        stopped_early: marking.stopped_early,
    })
}
