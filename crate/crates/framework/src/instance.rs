use graph_core::{induced_subgraph, is_connected, r_dominates, Graph, VertexSet};
use serde::{Deserialize, Serialize};

use crate::FrameworkError;

/// A graph with a target set `Z`, a budget `k` and a domination radius `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedInstance {
    pub graph: Graph,
    #[serde(rename = "Z")]
    pub z: VertexSet,
    pub k: usize,
    pub r: usize,
}

impl AnnotatedInstance {
    pub fn new(graph: Graph, z: VertexSet, k: usize, r: usize) -> Result<Self, FrameworkError> {
        if r == 0 {
            return Err(FrameworkError::InvalidInput("radius must be at least 1".into()));
        }
        if let Some(v) = z.max_id().filter(|&v| v >= graph.n()) {
            return Err(FrameworkError::InvalidInput(format!("target vertex {v} is not in the graph")));
        }
        Ok(Self { graph, z, k, r })
    }

    /// Every vertex is a target and `r = 1`.
    pub fn plain(graph: Graph, k: usize) -> Self {
        let z = VertexSet::full(graph.n());
        Self { graph, z, k, r: 1 }
    }

    /// `G[keep]` with target set `z ∩ keep`, plus the original id of every
    /// kept vertex.
    pub fn induced(
        g: &Graph,
        keep: &VertexSet,
        z: &VertexSet,
        k: usize,
        r: usize,
    ) -> Result<(Self, Vec<usize>), FrameworkError> {
        let (graph, kept_map) = induced_subgraph(g, keep)?;
        let z = kept_map.iter().enumerate().filter(|(_, v)| z.contains(v)).map(|(i, _)| i).collect();
        Ok((Self::new(graph, z, k, r)?, kept_map))
    }

    /// The one-vertex instance with budget 0 that stands for "no solution of
    /// size at most k".
    pub fn trivial_negative(r: usize) -> Self {
        Self { graph: Graph::empty(1), z: VertexSet::from([0]), k: 0, r }
    }
}

/// Which sets count as solutions of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    /// Connected and `r`-dominates every vertex.
    ConnectedDominatingSet,
    /// Connected and `r`-dominates `Z`.
    ConnectedCoreDominator,
    /// `r`-dominates `Z`.
    CoreDominator,
    /// `r`-dominates every vertex.
    DominatingSet,
}

impl Objective {
    pub fn connected(self) -> bool {
        matches!(self, Self::ConnectedDominatingSet | Self::ConnectedCoreDominator)
    }

    pub fn targets_core(self) -> bool {
        matches!(self, Self::ConnectedCoreDominator | Self::CoreDominator)
    }

    /// Whether `d` is a solution of `inst` (ignoring the budget).
    pub fn is_feasible(self, inst: &AnnotatedInstance, d: &VertexSet) -> bool {
        let g = &inst.graph;
        if d.max_id().is_some_and(|v| v >= g.n()) {
            return false;
        }
        let dv = d.to_vec();
        let dominated = if self.targets_core() {
            r_dominates(g, &dv, inst.z.iter(), inst.r)
        } else {
            r_dominates(g, &dv, g.vertices().collect::<Vec<_>>().iter(), inst.r)
        };
        dominated && (!self.connected() || is_connected(g, d))
    }
}

/// Parameters a kernel ran with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct KernelParams {
    pub t: Option<usize>,
    pub epsilon: Option<f64>,
    pub alpha: Option<f64>,
    /// The value of `(alpha - 1) / (4r + 2)`, kept for comparison with `t`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha_ratio: Option<f64>,
    pub core_provider: String,
    pub core_size: usize,
    /// The reduced instance was produced by solving the input exactly.
    pub fallback_exact: bool,
}

/// Counters describing how much work a kernel did.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct KernelStats {
    pub groups: usize,
    pub classes: usize,
    pub subsets_evaluated: u64,
    pub marked: usize,
    pub connector_added: usize,
    pub stopped_early: bool,
}

/// A reduced instance plus what is needed to lift its solutions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "OutputWire", try_from = "OutputWire")]
pub struct KernelOutput {
    pub reduced: AnnotatedInstance,
    /// Solutions accepted in the reduced instance.
    pub objective: Objective,
    /// Solutions accepted in the original instance.
    pub source: Objective,
    pub trivial_negative: bool,
    /// `kept_map[i]` is the original id of reduced vertex `i`.
    pub kept_map: Vec<usize>,
    pub params: KernelParams,
    pub stats: KernelStats,
}

impl KernelOutput {
    pub fn negative(source: Objective, r: usize, params: KernelParams, stats: KernelStats) -> Self {
        Self {
            reduced: AnnotatedInstance::trivial_negative(r),
            objective: Objective::ConnectedDominatingSet,
            source,
            trivial_negative: true,
            kept_map: vec![0],
            params,
            stats,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct OutputWire {
    reduced_graph: Graph,
    #[serde(rename = "Z")]
    z: VertexSet,
    k: usize,
    r: usize,
    kept_map: Vec<usize>,
    params: KernelParams,
    trivial_negative: bool,
    objective: Objective,
    source: Objective,
    stats: KernelStats,
}

impl From<KernelOutput> for OutputWire {
    fn from(o: KernelOutput) -> Self {
        Self {
            reduced_graph: o.reduced.graph,
            z: o.reduced.z,
            k: o.reduced.k,
            r: o.reduced.r,
            kept_map: o.kept_map,
            params: o.params,
            trivial_negative: o.trivial_negative,
            objective: o.objective,
            source: o.source,
            stats: o.stats,
        }
    }
}

impl TryFrom<OutputWire> for KernelOutput {
    type Error = FrameworkError;

    fn try_from(w: OutputWire) -> Result<Self, FrameworkError> {
        if w.kept_map.len() != w.reduced_graph.n() {
            return Err(FrameworkError::InvalidInput("kept_map length differs from the reduced vertex count".into()));
        }
        Ok(Self {
            reduced: AnnotatedInstance::new(w.reduced_graph, w.z, w.k, w.r)?,
            objective: w.objective,
            source: w.source,
            trivial_negative: w.trivial_negative,
            kept_map: w.kept_map,
            params: w.params,
            stats: w.stats,
        })
    }
}

/// A lifted solution. `value` is `None` for an invalid solution and otherwise
/// `min(|solution|, k + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub solution: VertexSet,
    pub value: Option<usize>,
    pub valid: bool,
}

/// Maps a solution of the reduced instance back to the original.
///
/// * invalid in the reduced instance: the empty set, value infinite;
/// * valid with at most `k` vertices: the same vertices in original ids;
/// * valid but larger than `k` (or any valid set of a trivial negative
///   output): all of `V(G)`, value `k + 1`.
///
/// `valid` and `value` are then computed on the original instance.
pub fn lift_solution(original: &AnnotatedInstance, output: &KernelOutput, d: &VertexSet) -> LiftReport {
    if !output.objective.is_feasible(&output.reduced, d) {
        return LiftReport { solution: VertexSet::new(), value: None, valid: false };
    }
    let solution = if output.trivial_negative || d.len() > original.k {
        VertexSet::full(original.graph.n())
    } else {
        d.map_through(&output.kept_map)
    };
    let valid = output.source.is_feasible(original, &solution);
    let value = valid.then(|| solution.len().min(original.k + 1));
    LiftReport { solution, value, valid }
}
