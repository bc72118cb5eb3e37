use graph_core::{Graph, VertexSet};

use crate::bits::{adjacency_masks, ball_masks, binomial, for_each_combination, is_connected_mask, mask_of, members};
use crate::caps::{OracleCaps, OracleError};

/// Find a smallest set within `budget` that `radius`-dominates `targets`
/// (a target inside the set counts as dominated), optionally connected.
#[derive(Debug, Clone)]
pub struct DominationQuery<'a> {
    pub graph: &'a Graph,
    pub targets: VertexSet,
    pub radius: usize,
    pub budget: usize,
    pub connected: bool,
}

impl<'a> DominationQuery<'a> {
    /// Dominate every vertex, radius 1, no connectivity requirement.
    pub fn all(graph: &'a Graph, budget: usize) -> Self {
        Self { graph, targets: VertexSet::full(graph.n()), radius: 1, budget, connected: false }
    }

    pub fn radius(mut self, r: usize) -> Self {
        self.radius = r;
        self
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected = yes;
        self
    }

    pub fn targets(mut self, targets: VertexSet) -> Self {
        self.targets = targets;
        self
    }
}

fn check_ids(g: &Graph, s: &VertexSet) -> Result<(), OracleError> {
    match s.max_id() {
        Some(v) if v >= g.n() => Err(OracleError::VertexOutOfRange { vertex: v, n: g.n() }),
        _ => Ok(()),
    }
}

/// Exhaustive search by increasing size. Returns `None` if no set of at most
/// `budget` vertices qualifies.
pub fn exact_min_dominator(q: &DominationQuery<'_>, caps: &OracleCaps) -> Result<Option<VertexSet>, OracleError> {
    let g = q.graph;
    caps.check_n(g.n())?;
    check_ids(g, &q.targets)?;
    let n = g.n();
    let balls = ball_masks(g, q.radius);
    let adj = adjacency_masks(g);
    let target = mask_of(q.targets.iter());
    // A vertex whose ball misses every target is useless unless it is needed
    // to connect; with no connectivity requirement it can be skipped.
    let useful: Vec<bool> = (0..n).map(|v| q.connected || balls[v] & target != 0).collect();
    let mut visited = 0u64;
    for s in 0..=q.budget.min(n) {
        visited = visited.saturating_add(binomial(n, s));
        if visited > caps.max_subsets {
            return Err(OracleError::CapExceeded { what: "subsets", value: visited, cap: caps.max_subsets });
        }
        let mut found = None;
        for_each_combination(n, s, |set| {
            let mut cover = 0u64;
            let mut it = set;
            while it != 0 {
                let v = it.trailing_zeros() as usize;
                it &= it - 1;
                if !useful[v] {
                    return true;
                }
                cover |= balls[v];
            }
            if cover & target == target && (!q.connected || is_connected_mask(&adj, set)) {
                found = Some(set);
                return false;
            }
            true
        });
        if let Some(set) = found {
            return Ok(Some(members(set).into_iter().collect()));
        }
    }
    Ok(None)
}

/// A set of at most `k` vertices that `r`-dominates `z` but not the whole
/// graph, if one exists (the colexicographically first such set).
pub fn domination_core_violation(
    g: &Graph,
    z: &VertexSet,
    k: usize,
    r: usize,
    caps: &OracleCaps,
) -> Result<Option<VertexSet>, OracleError> {
    caps.check_n(g.n())?;
    check_ids(g, z)?;
    let n = g.n();
    let balls = ball_masks(g, r);
    let target = mask_of(z.iter());
    let everything: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut visited = 0u64;
    for s in 0..=k.min(n) {
        visited = visited.saturating_add(binomial(n, s));
        if visited > caps.max_subsets {
            return Err(OracleError::CapExceeded { what: "subsets", value: visited, cap: caps.max_subsets });
        }
        let mut found = None;
        for_each_combination(n, s, |set| {
            let mut cover = 0u64;
            let mut it = set;
            while it != 0 {
                cover |= balls[it.trailing_zeros() as usize];
                it &= it - 1;
            }
            if cover & target == target && cover != everything {
                found = Some(set);
                return false;
            }
            true
        });
        if let Some(set) = found {
            return Ok(Some(members(set).into_iter().collect()));
        }
    }
    Ok(None)
}

/// Whether every set of at most `k` vertices that `r`-dominates `z` also
/// `r`-dominates the whole graph.
pub fn is_domination_core(
    g: &Graph,
    z: &VertexSet,
    k: usize,
    r: usize,
    caps: &OracleCaps,
) -> Result<bool, OracleError> {
    domination_core_violation(g, z, k, r, caps).map(|w| w.is_none())
}
