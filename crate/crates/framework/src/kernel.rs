use graph_core::{dominated_by, Graph, VertexSet};
use oracles::{exact_min_dominator, DominationQuery, OracleCaps};

use crate::{
    connect_dominator, core_partition, mark_group_trees, AnnotatedInstance, CoreOutcome, CoreProvider, FrameworkError,
    KernelOutput, KernelParams, KernelStats, MarkingCaps, Objective,
};

/// Knobs for [`lossy_cds_kernel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CdsKernelConfig {
    pub marking: MarkingCaps,
    /// Solve small optima exactly before marking. When a connected dominating
    /// set smaller than `3/eps` exists, the output is `G[Z ∪ D]` for an
    /// optimal `D`.
    pub exact_fallback: bool,
    /// Caps for the exact fallback search.
    pub oracle: OracleCaps,
}

/// `t = ceil(3 / eps)`.
pub fn cds_t(eps: f64) -> Result<usize, FrameworkError> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(FrameworkError::InvalidInput(format!("epsilon must be a positive number, got {eps}")));
    }
    Ok(((3.0 / eps).ceil() as usize).max(1))
}

/// `(1 + eps)`-approximate kernel for connected dominating set.
///
/// Groups are the singletons of the core `Z` and the classes of vertices with
/// equal neighbourhood in `Z`. For every set of at most `2t` groups an optimal
/// group Steiner tree is computed and marked if it has at most `2t` vertices.
/// If the marked vertices do not dominate `G` the answer is a trivial negative
/// instance; otherwise they are made connected with [`connect_dominator`] and
/// the output is the induced subgraph on the result, with the same `k`.
pub fn lossy_cds_kernel(
    g: &Graph,
    k: usize,
    eps: f64,
    provider: &dyn CoreProvider,
    config: &CdsKernelConfig,
) -> Result<KernelOutput, FrameworkError> {
    let t = cds_t(eps)?;
    if g.n() == 0 || !graph_core::is_connected(g, &VertexSet::full(g.n())) {
        return Err(FrameworkError::InvalidInput("the input graph must be connected and non-empty".into()));
    }
    let mut params =
        KernelParams { t: Some(t), epsilon: Some(eps), core_provider: provider.name(), ..KernelParams::default() };
    let mut stats = KernelStats::default();
    let source = Objective::ConnectedDominatingSet;

    let z = match provider.provide(g, k, 1)? {
        CoreOutcome::Reject => return Ok(KernelOutput::negative(source, 1, params, stats)),
        CoreOutcome::Core(z) => z,
    };
    params.core_size = z.len();

    if config.exact_fallback {
        // t - 1 is the largest size below 3/eps.
        let q = DominationQuery::all(g, k.min(t - 1)).connected(true);
        if let Some(d) = exact_min_dominator(&q, &config.oracle)? {
            params.fallback_exact = true;
            return Ok(finish(g, z.union(&d), &z, k, source, params, stats));
        }
    }

    let partition = core_partition(g, &z);
    let groups = partition.groups();
    stats.groups = groups.len();
    stats.classes = partition.index();
    let marking = mark_group_trees(g, &groups, 2 * t, 2 * t, &config.marking)?;
    stats.subsets_evaluated = marking.evaluated;
    stats.marked = marking.marked.len();
    stats.stopped_early = marking.stopped_early;

    let marked = marking.marked;
    if dominated_by(g, &marked.to_vec(), 1).iter().any(|&d| !d) {
        return Ok(KernelOutput::negative(source, 1, params, stats));
    }
    let connection = connect_dominator(g, &VertexSet::full(g.n()), &marked, 1)?;
    stats.connector_added = connection.added.len();
    Ok(finish(g, marked.union(&connection.added), &z, k, source, params, stats))
}

fn finish(
    g: &Graph,
    keep: VertexSet,
    z: &VertexSet,
    k: usize,
    source: Objective,
    params: KernelParams,
    stats: KernelStats,
) -> KernelOutput {
    let (reduced, kept_map) = AnnotatedInstance::induced(g, &keep, z, k, 1).expect("kept vertices are in range");
    KernelOutput {
        reduced,
        objective: Objective::ConnectedDominatingSet,
        source,
        trivial_negative: false,
        kept_map,
        params,
        stats,
    }
}

/// Bi-kernel for dominating set from a `k`-domination core `z`.
///
/// Keeps `z` and the smallest vertex of every class of vertices with equal,
/// non-empty neighbourhood in `z`. Vertices seeing nothing of `z` cannot help
/// to dominate it and are dropped. The reduced question is whether `z` can be
/// dominated by at most `k` vertices.
pub fn ds_bikernel(g: &Graph, z: &VertexSet, k: usize) -> Result<KernelOutput, FrameworkError> {
    if let Some(v) = z.max_id().filter(|&v| v >= g.n()) {
        return Err(FrameworkError::InvalidInput(format!("core vertex {v} is not in the graph")));
    }
    let partition = core_partition(g, z);
    let mut keep = z.clone();
    keep.extend(partition.classes.iter().filter(|(sig, _)| !sig.is_empty()).map(|(_, members)| members[0]));
    let params = KernelParams { core_provider: "fixed".into(), core_size: z.len(), ..KernelParams::default() };
    let stats = KernelStats {
        groups: z.len() + partition.index(),
        classes: partition.index(),
        marked: keep.len(),
        ..KernelStats::default()
    };
    let mut out = finish(g, keep, z, k, Objective::DominatingSet, params, stats);
    out.objective = Objective::CoreDominator;
    Ok(out)
}
