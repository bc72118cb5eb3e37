use graph_core::{Graph, VertexSet};
use oracles::{exact_steiner_tree, OracleCaps};
use serde::{Deserialize, Serialize};

use crate::bits::{for_each_subset, members};
use crate::{closure, ClosureBudget, ClosureReport, SparseError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreeClosure {
    pub set: VertexSet,
    /// The `rq`-closure the trees were grown from.
    pub base: ClosureReport,
    /// Subsets whose tree had at most `rq` vertices.
    pub trees_kept: usize,
    pub subsets_examined: u64,
}

const MAX_SUBSETS: u64 = 2_000_000;

/// A superset of `x` meant to keep every Steiner tree of at most `rq`
/// vertices between at most `q` vertices of `x`.
///
/// First `X0` is the `rq`-closure of `x`. Then, for every set `Y` of at most
/// `q` vertices of `X0`, an optimal Steiner tree for `Y` is computed in `G`
/// with the edges inside `X0` deleted; its vertices are added when it has at
/// most `rq` of them.
pub fn tree_closure(
    g: &Graph,
    x: &VertexSet,
    q: usize,
    r: usize,
    budget: ClosureBudget,
) -> Result<TreeClosure, SparseError> {
    if q == 0 || r == 0 {
        return Err(SparseError::InvalidInput("q and r must be at least 1".into()));
    }
    let base = closure(g, x, r * q, budget)?;
    let x0 = base.set.to_vec();
    if x0.len() > 64 {
        return Err(SparseError::CapExceeded { what: "closure vertices", value: x0.len() as u64, cap: 64 });
    }
    let inside = base.set.mask(g.n());
    let outside_edges = g.edges().into_iter().filter(|&(u, v)| !(inside[u] && inside[v]));
    let sparse = Graph::from_edges(g.n(), outside_edges)?;
    let caps = OracleCaps { max_n: 64, ..OracleCaps::default() };

    let mut set = base.set.clone();
    let mut trees_kept = 0;
    let mut examined = 0u64;
    let positions: Vec<usize> = (0..x0.len()).collect();
    for size in 2..=q.min(x0.len()) {
        let mut err = None;
        for_each_subset(&positions, size, |m| {
            examined += 1;
            if examined > MAX_SUBSETS {
                err = Some(SparseError::CapExceeded { what: "terminal subsets", value: examined, cap: MAX_SUBSETS });
                return false;
            }
            let y: VertexSet = members(m).into_iter().map(|i| x0[i]).collect();
            match exact_steiner_tree(&sparse, &y, &caps) {
                Ok(sol) => {
                    if sol.size.is_some_and(|s| s <= r * q) {
                        trees_kept += 1;
                        set.extend(sol.vertices.iter().copied());
                    }
                    true
                }
                Err(e) => {
                    err = Some(e.into());
                    false
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    Ok(TreeClosure { set, base, trees_kept, subsets_examined: examined })
}
