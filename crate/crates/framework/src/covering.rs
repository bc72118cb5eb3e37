use std::collections::VecDeque;

use graph_core::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::FrameworkError;

/// Connected pieces of a connected vertex set, each with at most `2t` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringFamily {
    pub parts: Vec<VertexSet>,
    pub t: usize,
}

impl CoveringFamily {
    pub fn total_size(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }
}

/// Splits a connected set `d` into connected parts of size at most `2t`.
///
/// Works on a BFS spanning tree of `G[d]` rooted at the smallest vertex.
/// Repeatedly:
/// 1. if some vertex has subtree weight in `[t, 2t]`, cut off the lightest
///    such subtree (ties by id) as a part;
/// 2. otherwise, if some vertex is heavier than `2t`, take the lightest such
///    `v`, add children subtrees (by id) until their weight exceeds `t`, emit
///    `v` plus those subtrees and delete the subtrees (`v` stays);
/// 3. otherwise emit what is left and stop.
///
/// The result has at most `|d|/t + 1` parts of total size at most
/// `(1 + 1/t)|d| + 1`.
pub fn covering_family(g: &Graph, d: &VertexSet, t: usize) -> Result<CoveringFamily, FrameworkError> {
    if t == 0 {
        return Err(FrameworkError::InvalidInput("covering family needs t >= 1".into()));
    }
    let n = g.n();
    if let Some(v) = d.iter().copied().find(|&v| v >= n) {
        return Err(FrameworkError::InvalidInput(format!("vertex {v} is not in the graph")));
    }
    let Some(&root) = d.first() else {
        return Ok(CoveringFamily { parts: Vec::new(), t });
    };

    let inside = d.mask(n);
    let mut parent = vec![usize::MAX; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(d.len());
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in g.neighbors(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                parent[w] = u;
                children[u].push(w);
                queue.push_back(w);
            }
        }
    }
    if order.len() != d.len() {
        return Err(FrameworkError::InvalidInput("the dominator does not induce a connected subgraph".into()));
    }
    for c in &mut children {
        c.sort_unstable();
    }

    let mut alive = inside;
    let mut weight = vec![0usize; n];
    let mut parts = Vec::new();
    loop {
        // Subtree weights over the surviving tree; BFS order reversed is a post-order.
        for &u in order.iter().rev() {
            if alive[u] {
                weight[u] = 1 + children[u].iter().filter(|&&c| alive[c]).map(|&c| weight[c]).sum::<usize>();
            }
        }
        let lightest = |pred: &dyn Fn(usize) -> bool| {
            order.iter().copied().filter(|&u| alive[u] && pred(weight[u])).min_by_key(|&u| (weight[u], u))
        };

        if let Some(v) = lightest(&|w| t <= w && w <= 2 * t) {
            let sub = subtree(v, &children, &alive);
            for &u in &sub {
                alive[u] = false;
            }
            parts.push(VertexSet::from(sub));
            if !alive[root] {
                break;
            }
        } else if let Some(v) = lightest(&|w| w > 2 * t) {
            let mut part = vec![v];
            let mut sum = 0;
            for &c in children[v].iter().filter(|&&c| alive[c]) {
                if sum > t {
                    break;
                }
                sum += weight[c];
                part.extend(subtree(c, &children, &alive));
            }
            for &u in &part[1..] {
                alive[u] = false;
            }
            parts.push(VertexSet::from(part));
        } else {
            parts.push(VertexSet::from(subtree(root, &children, &alive)));
            break;
        }
    }
    Ok(CoveringFamily { parts, t })
}

fn subtree(v: usize, children: &[Vec<usize>], alive: &[bool]) -> Vec<usize> {
    let mut out = vec![v];
    let mut i = 0;
    while i < out.len() {
        let u = out[i];
        out.extend(children[u].iter().copied().filter(|&c| alive[c]));
        i += 1;
    }
    out
}
