use graph_core::{Graph, VertexSet};
use oracles::{exact_min_dominator, is_domination_core, DominationQuery, OracleCaps};

use crate::FrameworkError;

/// What a core provider found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreOutcome {
    /// A set `Z` such that every `(≤k)`-set `r`-dominating `Z` `r`-dominates `G`.
    Core(VertexSet),
    /// The provider certified that no solution of size at most `k` exists.
    Reject,
}

/// Supplies a domination core, or proves the instance negative.
pub trait CoreProvider {
    /// Short label recorded in kernel metadata.
    fn name(&self) -> String;
    fn provide(&self, g: &Graph, k: usize, r: usize) -> Result<CoreOutcome, FrameworkError>;
}

/// `Z = V(G)`, trivially a core for every `k` and `r`. Never rejects.
#[derive(Debug, Clone, Copy, Default)]
pub struct WholeGraphCore;

impl CoreProvider for WholeGraphCore {
    fn name(&self) -> String {
        "whole-graph".into()
    }

    fn provide(&self, g: &Graph, _k: usize, _r: usize) -> Result<CoreOutcome, FrameworkError> {
        Ok(CoreOutcome::Core(VertexSet::full(g.n())))
    }
}

/// A core chosen by the caller. It is trusted, not checked.
#[derive(Debug, Clone)]
pub struct FixedCore(pub VertexSet);

impl CoreProvider for FixedCore {
    fn name(&self) -> String {
        "fixed".into()
    }

    fn provide(&self, g: &Graph, _k: usize, _r: usize) -> Result<CoreOutcome, FrameworkError> {
        if let Some(v) = self.0.max_id().filter(|&v| v >= g.n()) {
            return Err(FrameworkError::InvalidInput(format!("core vertex {v} is not in the graph")));
        }
        Ok(CoreOutcome::Core(self.0.clone()))
    }
}

/// Exhaustive search, for small graphs.
///
/// Rejects when no (connected, if `connected` is set) `r`-dominating set of
/// size at most `k` exists. Otherwise starts from `V(G)` and drops vertices in
/// increasing id order while the exact core check still passes, so the result
/// is inclusion-minimal.
#[derive(Debug, Clone, Copy)]
pub struct BruteForceCore {
    pub caps: OracleCaps,
    pub connected: bool,
}

impl Default for BruteForceCore {
    fn default() -> Self {
        Self { caps: OracleCaps::default(), connected: true }
    }
}

impl CoreProvider for BruteForceCore {
    fn name(&self) -> String {
        "brute-force".into()
    }

    fn provide(&self, g: &Graph, k: usize, r: usize) -> Result<CoreOutcome, FrameworkError> {
        let q = DominationQuery::all(g, k).radius(r).connected(self.connected);
        if exact_min_dominator(&q, &self.caps)?.is_none() {
            return Ok(CoreOutcome::Reject);
        }
        let mut z = VertexSet::full(g.n());
        for v in g.vertices() {
            z.remove(&v);
            if !is_domination_core(g, &z, k, r, &self.caps)? {
                z.insert(v);
            }
        }
        Ok(CoreOutcome::Core(z))
    }
}
