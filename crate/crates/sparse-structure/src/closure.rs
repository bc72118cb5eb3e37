use graph_core::{bfs_avoiding, Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::{max_projection_size, projection, SparseError};

/// When [`closure`] may stop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureBudget {
    /// Largest acceptable projection size.
    pub target: usize,
    /// Most vertices the closure may add; `None` for no limit.
    pub max_added: Option<usize>,
}

impl Default for ClosureBudget {
    fn default() -> Self {
        Self { target: 2, max_added: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub set: VertexSet,
    /// Vertices added, in order.
    pub added: Vec<usize>,
    pub max_projection_before: usize,
    pub max_projection_after: usize,
    /// `|X'| / |X|`, or 1 for empty `X`.
    pub growth: f64,
    /// Whether every outside projection is within the target.
    pub target_met: bool,
}

/// Greedy `r`-closure: grows `X` until every vertex outside has at most
/// `target` vertices in its `r`-projection, or the budget runs out.
///
/// Each round collects the outside vertices whose projection is too large and
/// adds the outside vertex lying within distance `r - 1` (along paths avoiding
/// the current set) of the most of them, ties by smallest id. An oversized
/// vertex counts as within distance 0 of itself, so every round makes progress.
pub fn closure(g: &Graph, x: &VertexSet, r: usize, budget: ClosureBudget) -> Result<ClosureReport, SparseError> {
    if r == 0 {
        return Err(SparseError::InvalidInput("closure radius must be at least 1".into()));
    }
    if let Some(v) = x.max_id().filter(|&v| v >= g.n()) {
        return Err(SparseError::InvalidInput(format!("vertex {v} is not in the graph")));
    }
    let n = g.n();
    let mut set = x.clone();
    let mut added = Vec::new();
    let before = max_projection_size(g, &set, r)?.0;
    loop {
        let oversized: Vec<usize> = g
            .vertices()
            .filter(|u| !set.contains(u))
            .map(|u| projection(g, u, &set, r).map(|p| (u, p.m.len())))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .filter(|&(_, size)| size > budget.target)
            .map(|(u, _)| u)
            .collect();
        if oversized.is_empty() || budget.max_added.is_some_and(|cap| added.len() >= cap) {
            break;
        }
        let mask = set.mask(n);
        let mut hits = vec![0usize; n];
        for &u in &oversized {
            for (w, d) in bfs_avoiding(g, &[u], &mask, Some(r - 1)).into_iter().enumerate() {
                if d.is_some() && !mask[w] {
                    hits[w] += 1;
                }
            }
        }
        let w = (0..n).filter(|&w| !mask[w]).max_by_key(|&w| (hits[w], std::cmp::Reverse(w))).expect("oversized");
        set.insert(w);
        added.push(w);
    }
    let after = max_projection_size(g, &set, r)?.0;
    let growth = if x.is_empty() { 1.0 } else { set.len() as f64 / x.len() as f64 };
    Ok(ClosureReport {
        set,
        added,
        max_projection_before: before,
        max_projection_after: after,
        growth,
        target_met: after <= budget.target,
    })
}
