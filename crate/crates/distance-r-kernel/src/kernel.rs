use framework::{
    lift_solution, AnnotatedInstance, CoreOutcome, CoreProvider, FrameworkError, KernelOutput, KernelParams,
    KernelStats, LiftReport, MarkingCaps, Objective,
};
use graph_core::{Graph, VertexSet};
use oracles::{exact_min_dominator, DominationQuery, OracleCaps};
use serde::{Deserialize, Serialize};

use crate::{build_reduced_graph, connected_core, profile_paths, ProfileClasses};

/// Radius, target ratio and the covering parameter derived from them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RKernelParams {
    pub r: usize,
    pub alpha: f64,
    /// `ceil((4r + 2) / (alpha - 1))`: the smallest `t` with
    /// `1 + (4r + 2) / t <= alpha`.
    pub t: usize,
}

impl RKernelParams {
    pub fn new(r: usize, alpha: f64) -> Result<Self, FrameworkError> {
        if r == 0 {
            return Err(FrameworkError::InvalidInput("radius must be at least 1".into()));
        }
        if !(alpha.is_finite() && alpha > 1.0) {
            return Err(FrameworkError::InvalidInput(format!("alpha must be a number above 1, got {alpha}")));
        }
        let t = (((4 * r + 2) as f64 / (alpha - 1.0)).ceil() as usize).max(1);
        Ok(Self { r, alpha, t })
    }

    /// `(alpha - 1) / (4r + 2)`, the reciprocal of the unrounded `t`.
    pub fn alpha_ratio(&self) -> f64 {
        (self.alpha - 1.0) / (4 * self.r + 2) as f64
    }
}

/// Knobs for [`r_lossy_kernel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RKernelConfig {
    pub marking: MarkingCaps,
    /// Solve small optima exactly before marking. When a connected
    /// distance-`r` dominating set of fewer than `t` vertices exists, the
    /// output is `G[Z ∪ D]` for an optimal `D`.
    pub exact_fallback: bool,
    pub oracle: OracleCaps,
}

/// `alpha`-approximate kernel for connected distance-`r` domination.
///
/// Rejects (trivial negative output) when [`connected_core`] does. Otherwise
/// the output is `((G', Z), k)` with `G' = G[keep]` from
/// [`build_reduced_graph`], asking for a connected set of at most `k`
/// vertices that `r`-dominates `Z`.
pub fn r_lossy_kernel(
    g: &Graph,
    k: usize,
    params: &RKernelParams,
    provider: &dyn CoreProvider,
    config: &RKernelConfig,
) -> Result<KernelOutput, FrameworkError> {
    let r = params.r;
    let source = Objective::ConnectedDominatingSet;
    let mut kparams = KernelParams {
        t: Some(params.t),
        alpha: Some(params.alpha),
        alpha_ratio: Some(params.alpha_ratio()),
        core_provider: provider.name(),
        ..KernelParams::default()
    };
    let mut stats = KernelStats::default();
    let Some(core) = connected_core(g, k, r, provider)? else {
        return Ok(KernelOutput::negative(source, r, kparams, stats));
    };
    let z = core.z;
    kparams.core_size = z.len();
    stats.connector_added = core.connector_added;

    if config.exact_fallback {
        let q = DominationQuery::all(g, k.min(params.t - 1)).radius(r).connected(true);
        if let Some(d) = exact_min_dominator(&q, &config.oracle)? {
            kparams.fallback_exact = true;
            return output(g, &z.union(&d), &z, k, r, (Objective::ConnectedCoreDominator, source), kparams, stats);
        }
    }

    let red = build_reduced_graph(g, &z, params.t, r, &config.marking)?;
    stats.groups = z.len() + red.classes.index();
    stats.classes = red.classes.index();
    stats.subsets_evaluated = red.subsets_evaluated;
    stats.marked = red.keep.len();
    stats.stopped_early = red.stopped_early;
    output(g, &red.keep, &z, k, r, (Objective::ConnectedCoreDominator, source), kparams, stats)
}

#[allow(clippy::too_many_arguments)]
fn output(
    g: &Graph,
    keep: &VertexSet,
    z: &VertexSet,
    k: usize,
    r: usize,
    (objective, source): (Objective, Objective),
    params: KernelParams,
    stats: KernelStats,
) -> Result<KernelOutput, FrameworkError> {
    let (reduced, kept_map) = AnnotatedInstance::induced(g, keep, z, k, r)?;
    Ok(KernelOutput { reduced, objective, source, trivial_negative: false, kept_map, params, stats })
}

/// Lifts a solution of an [`r_lossy_kernel`] or [`one_approx_ds_bikernel`]
/// output back to `original`.
///
/// A connected set of `G'` that `r`-dominates `Z` there does so in `G` too
/// (projections only shrink in a subgraph), and because `Z` is a core it then
/// dominates all of `G`. The value rules are those of [`lift_solution`].
pub fn r_lift(original: &AnnotatedInstance, output: &KernelOutput, d: &VertexSet) -> LiftReport {
    lift_solution(original, output, d)
}

/// Exact bi-kernel for distance-`r` domination: the provider's core `Z` plus,
/// for every profile class of `~_{Z,r}` with a non-empty projection, its
/// smallest member and the paths that keep that member's profile. Members of
/// the empty-profile class reach nothing of `Z` and are dropped. The reduced
/// question is whether `Z` can be `r`-dominated by at most `k` vertices.
pub fn one_approx_ds_bikernel(
    g: &Graph,
    k: usize,
    r: usize,
    provider: &dyn CoreProvider,
) -> Result<KernelOutput, FrameworkError> {
    let source = Objective::DominatingSet;
    let mut params = KernelParams { core_provider: provider.name(), ..KernelParams::default() };
    let z = match provider.provide(g, k, r)? {
        CoreOutcome::Reject => return Ok(KernelOutput::negative(source, r, params, KernelStats::default())),
        CoreOutcome::Core(z) => z,
    };
    params.core_size = z.len();
    let classes = ProfileClasses::compute(g, &z, r)?;
    let mut keep = z.clone();
    for class in classes.classes.iter().filter(|c| !c.profile.is_empty()) {
        keep.extend(profile_paths(g, &z, class.members[0], r));
    }
    let stats = KernelStats {
        groups: z.len() + classes.index(),
        classes: classes.index(),
        marked: keep.len(),
        ..KernelStats::default()
    };
    output(g, &keep, &z, k, r, (Objective::CoreDominator, source), params, stats)
}
