use framework::{lossy_cds_kernel, CdsKernelConfig, CoreOutcome, CoreProvider, FrameworkError, KernelOutput};
use graph_core::{find_biclique, Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::BicliqueError;

/// `(2d + 1) k^(d + 1)`: cores larger than this can always be shrunk.
pub fn core_size_bound(d: usize, k: usize) -> u128 {
    (2 * d as u128 + 1).saturating_mul((k as u128).saturating_pow(d as u32 + 1))
}

/// `2d |Z|^d`: the most classes of equal neighbourhood in `Z` a `K_{d,d}`-free
/// graph can have.
pub fn class_bound(d: usize, z_len: usize) -> u128 {
    (2 * d as u128).saturating_mul((z_len as u128).saturating_pow(d as u32))
}

/// One link of the chain: `v` was picked and `x` is what remains of the
/// previous set inside `N[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub v: usize,
    pub x: VertexSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// `removed` can leave the core.
    CoreReduced,
    /// No vertex sees a `1/k` fraction of the core, so no `k` vertices dominate it.
    DsExceedsK,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreReductionTrace {
    pub chain: Vec<ChainStep>,
    pub removed: Option<usize>,
    pub verdict: Verdict,
}

fn closed_count(g: &Graph, v: usize, x: &[bool]) -> usize {
    usize::from(x[v]) + g.neighbors(v).iter().filter(|&&w| x[w]).count()
}

/// The chain procedure without the core-size precondition.
///
/// Starting from `X = Z`, repeatedly picks a vertex `v` outside the chain with
/// `|N[v] ∩ X| >= ceil(|X| / k)` (most such neighbours, then smallest id) and
/// shrinks `X` to `X ∩ N[v]`. When no vertex qualifies, the smallest vertex of
/// `X` not on the chain is proposed for removal. If no vertex qualifies even
/// for `X = Z`, the verdict is that `Z` cannot be dominated by `k` vertices.
///
/// Below the size bound the removal is not guaranteed to keep the core
/// property; [`reduce_core_once`] enforces the bound.
pub fn reduce_core_step(g: &Graph, z: &VertexSet, k: usize) -> Result<CoreReductionTrace, BicliqueError> {
    if k == 0 {
        return Err(BicliqueError::InvalidInput("k must be at least 1".into()));
    }
    if z.is_empty() {
        return Err(BicliqueError::InvalidInput("the core is empty".into()));
    }
    if let Some(v) = z.max_id().filter(|&v| v >= g.n()) {
        return Err(BicliqueError::InvalidInput(format!("core vertex {v} is not in the graph")));
    }
    let n = g.n();
    let mut x = z.mask(n);
    let mut x_len = z.len();
    let mut in_chain = vec![false; n];
    let mut chain = Vec::new();
    loop {
        let need = x_len.div_ceil(k);
        let best = g
            .vertices()
            .filter(|&v| !in_chain[v])
            .map(|v| (closed_count(g, v, &x), v))
            .filter(|&(c, _)| c >= need)
            .max_by_key(|&(c, v)| (c, std::cmp::Reverse(v)));
        let Some((_, v)) = best else { break };
        in_chain[v] = true;
        let mut keep = vec![false; n];
        keep[v] = x[v];
        for &w in g.neighbors(v) {
            keep[w] = x[w];
        }
        x = keep;
        x_len = x.iter().filter(|&&b| b).count();
        chain.push(ChainStep { v, x: (0..n).filter(|&u| x[u]).collect() });
    }
    if chain.is_empty() {
        return Ok(CoreReductionTrace { chain, removed: None, verdict: Verdict::DsExceedsK });
    }
    let Some(z) = (0..n).find(|&u| x[u] && !in_chain[u]) else {
        return Err(BicliqueError::InvalidInput("every remaining core vertex lies on the chain".into()));
    };
    Ok(CoreReductionTrace { chain, removed: Some(z), verdict: Verdict::CoreReduced })
}

/// Finds a vertex whose removal keeps `z` a `k`-domination core, or concludes
/// that no `k` vertices dominate `G`.
///
/// Requires `|z| > (2d + 1) k^(d + 1)`. On a `K_{d,d}`-free graph the chain
/// then has fewer than `d` links and the proposed vertex exists; otherwise a
/// [`BicliqueError::NotBicliqueFree`] is returned.
pub fn reduce_core_once(g: &Graph, z: &VertexSet, k: usize, d: usize) -> Result<CoreReductionTrace, BicliqueError> {
    if d == 0 {
        return Err(BicliqueError::InvalidInput("d must be at least 1".into()));
    }
    let bound = core_size_bound(d, k);
    if z.len() as u128 <= bound {
        return Err(BicliqueError::InvalidInput(format!(
            "the core has {} vertices, not more than (2d+1)k^(d+1) = {bound}",
            z.len()
        )));
    }
    let trace = reduce_core_step(g, z, k).map_err(|e| match e {
        BicliqueError::InvalidInput(reason) if reason.starts_with("every remaining") => {
            BicliqueError::NotBicliqueFree { d, reason }
        }
        other => other,
    })?;
    if trace.chain.len() >= d {
        let left: Vec<usize> = trace.chain[..d].iter().map(|s| s.v).collect();
        let right: Vec<usize> = trace.chain[d - 1].x.iter().copied().filter(|u| !left.contains(u)).take(d).collect();
        return Err(BicliqueError::NotBicliqueFree {
            d,
            reason: format!("chain of length {} gives sides {left:?} and {right:?}", trace.chain.len()),
        });
    }
    Ok(trace)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoreComputation {
    /// A `k`-domination core of size at most `(2d + 1) k^(d + 1)`, and the
    /// vertices removed from `V(G)` in order.
    Core { z: VertexSet, removed: Vec<usize> },
    /// No `k` vertices dominate `G`.
    Reject,
}

/// Starts from `Z = V(G)` and applies [`reduce_core_once`] until `Z` is within
/// the size bound.
pub fn compute_core(g: &Graph, k: usize, d: usize) -> Result<CoreComputation, BicliqueError> {
    let bound = core_size_bound(d, k);
    let mut z = VertexSet::full(g.n());
    let mut removed = Vec::new();
    while z.len() as u128 > bound {
        let trace = reduce_core_once(g, &z, k, d)?;
        match trace.removed {
            Some(v) => {
                z.remove(&v);
                removed.push(v);
            }
            None => return Ok(CoreComputation::Reject),
        }
    }
    Ok(CoreComputation::Core { z, removed })
}

/// [`compute_core`] as a core provider for the generic kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BicliqueCore {
    pub d: usize,
    /// Graphs with at most this many vertices are checked for `K_{d,d}` first.
    pub precheck_max_n: usize,
}

impl BicliqueCore {
    pub fn new(d: usize) -> Self {
        Self { d, precheck_max_n: 64 }
    }
}

impl CoreProvider for BicliqueCore {
    fn name(&self) -> String {
        format!("biclique-free(d={})", self.d)
    }

    fn provide(&self, g: &Graph, k: usize, r: usize) -> Result<CoreOutcome, FrameworkError> {
        if r != 1 {
            return Err(FrameworkError::InvalidInput("the biclique-free core is for radius 1".into()));
        }
        if g.n() <= self.precheck_max_n {
            if let Some((a, b)) = find_biclique(g, self.d) {
                return Err(FrameworkError::InvalidInput(format!(
                    "the graph contains K_{{{0},{0}}} with sides {a:?} and {b:?}",
                    self.d
                )));
            }
        }
        match compute_core(g, k, self.d) {
            Ok(CoreComputation::Core { z, .. }) => Ok(CoreOutcome::Core(z)),
            Ok(CoreComputation::Reject) => Ok(CoreOutcome::Reject),
            Err(e) => Err(FrameworkError::InvalidInput(e.to_string())),
        }
    }
}

/// `(1 + eps)`-approximate kernel for connected dominating set on
/// `K_{d,d}`-free graphs: [`compute_core`] followed by the generic kernel.
pub fn psaks_kdd(
    g: &Graph,
    k: usize,
    eps: f64,
    d: usize,
    config: &CdsKernelConfig,
) -> Result<KernelOutput, BicliqueError> {
    Ok(lossy_cds_kernel(g, k, eps, &BicliqueCore::new(d), config)?)
}
