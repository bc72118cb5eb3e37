use graph_core::{exact_subdivision, Graph, SubdivisionSpec};
use oracles::{exact_min_dominator, DominationQuery, OracleCaps, SetCoverInstance};
use serde::{Deserialize, Serialize};

use crate::ReductionError;

/// `k' - k` for every instance.
pub const BUDGET_OFFSET: usize = 1;

/// Where each part of the gadget sits in the output graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleMap {
    /// `element_vertices[e]` is the vertex of element `e`.
    pub element_vertices: Vec<usize>,
    /// `set_vertices[i]` is the vertex of family `i`.
    pub set_vertices: Vec<usize>,
    pub guard: usize,
    pub pendant: usize,
    pub k_prime: usize,
    pub offset: usize,
    /// End vertices of the isolated subdivided edges added when some element
    /// lies in no family. Empty otherwise.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub padding: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub graph: Graph,
    /// The gadget before subdivision. Its vertex ids are kept in `graph`.
    pub base: Graph,
    pub r: usize,
    pub roles: RoleMap,
}

/// Builds the guard gadget for `sc` and subdivides it exactly `r` times.
///
/// Base vertices: elements `0..|U|`, then one vertex per family, the guard
/// and its pendant. Edges: element-family incidences, guard to every family,
/// guard to pendant. If some element lies in no family the instance is
/// negative, and `k + 2` isolated edges are added so that no `k + 1`
/// vertices can dominate the output.
pub fn reduce_to_rds(sc: &SetCoverInstance, r: usize) -> Result<Reduction, ReductionError> {
    if r == 0 {
        return Err(ReductionError::InvalidInput("radius must be at least 1".into()));
    }
    let u = sc.universe;
    let f = sc.families.len();
    let guard = u + f;
    let pendant = guard + 1;
    let mut edges = Vec::new();
    for (i, family) in sc.families.iter().enumerate() {
        edges.extend(family.iter().map(|&e| (e, u + i)));
        edges.push((u + i, guard));
    }
    edges.push((guard, pendant));

    let mut n = pendant + 1;
    let mut padding = Vec::new();
    if !sc.uncovered().is_empty() {
        for _ in 0..sc.k + 2 {
            edges.push((n, n + 1));
            padding.extend([n, n + 1]);
            n += 2;
        }
    }

    let base = Graph::from_edges(n, edges).map_err(|e| ReductionError::InvalidInput(e.to_string()))?;
    let spec = SubdivisionSpec::new(base.clone(), r).map_err(|e| ReductionError::InvalidInput(e.to_string()))?;
    let graph = exact_subdivision(&spec);
    let roles = RoleMap {
        element_vertices: (0..u).collect(),
        set_vertices: (u..u + f).collect(),
        guard,
        pendant,
        k_prime: sc.k + BUDGET_OFFSET,
        offset: BUDGET_OFFSET,
        padding,
    };
    Ok(Reduction { graph, base, r, roles })
}

/// Outcome of the connected-variant bound check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedCheck {
    /// `(2r + 1) k'`.
    pub budget: usize,
    /// Size of a smallest connected `r`-dominating set, if one fits the budget.
    pub connected_min: Option<usize>,
    pub within: bool,
}

/// Whether the reduced graph has a connected `r`-dominating set of size at
/// most `(2r + 1) k'`. This is a bound, not an equivalence.
pub fn connected_variant_check(red: &Reduction, caps: &OracleCaps) -> Result<ConnectedCheck, ReductionError> {
    let budget = (2 * red.r + 1) * red.roles.k_prime;
    let q = DominationQuery::all(&red.graph, budget).radius(red.r).connected(true);
    let connected_min = exact_min_dominator(&q, caps)?.map(|d| d.len());
    Ok(ConnectedCheck { budget, connected_min, within: connected_min.is_some() })
}
