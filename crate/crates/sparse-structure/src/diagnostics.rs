use graph_core::{dominated_by, Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::{closure, exchange_improve, max_projection_size, wcol, ClosureBudget, SparseError, WcolMode};

/// Measured structure of one instance around a vertex set `X`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub max_projection_size: usize,
    /// `|cl(X)| / |X|` for the greedy `r`-closure.
    pub closure_growth: f64,
    /// Greedy upper bound on the weak `r`-coloring number.
    pub wcol_greedy: usize,
    /// Exchanges of size at most 2 applied to `X` as a dominator of the whole
    /// graph; `None` when `X` does not dominate or the graph is too large.
    pub exchange_steps: Option<usize>,
}

pub fn diagnostics(g: &Graph, x: &VertexSet, r: usize, budget: ClosureBudget) -> Result<Diagnostics, SparseError> {
    let (max_projection_size, _) = max_projection_size(g, x, r)?;
    let cl = closure(g, x, r, budget)?;
    let (wcol_greedy, _) = wcol(g, r, WcolMode::Greedy)?;
    let dominates = dominated_by(g, &x.to_vec(), 1).into_iter().all(|d| d);
    let exchange_steps = if dominates && g.n() <= 64 {
        Some(exchange_improve(g, &VertexSet::full(g.n()), x, 2)?.steps.len())
    } else {
        None
    };
    Ok(Diagnostics { max_projection_size, closure_growth: cl.growth, wcol_greedy, exchange_steps })
}
