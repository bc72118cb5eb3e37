use std::path::{Path, PathBuf};

use biclique_free::{class_bound, core_size_bound, psaks_kdd, BicliqueCore};
use distance_r_kernel::{one_approx_ds_bikernel, r_lossy_kernel, RKernelConfig, RKernelParams};
use framework::{
    cds_t, ds_bikernel, lift_solution, lossy_cds_kernel, AnnotatedInstance, BruteForceCore, CdsKernelConfig,
    CoreOutcome, CoreProvider, KernelOutput, KernelParams, KernelStats, MarkingCaps, Objective, WholeGraphCore,
};
use graph_core::{degeneracy, Graph, VertexSet};
use oracles::{exact_min_dominator, exact_set_cover, DominationQuery, OracleCaps};
use reductions::{membership_check_hp, reduce_to_rds};
use serde::{Deserialize, Serialize};
use sparse_structure::{wcol, WcolMode};

use crate::report::{
    BoundCheck, GraphDiagnostics, InputStats, Opt, ReducedStats, RunReport, SetCoverReport, Verification,
    SCHEMA_VERSION,
};
use crate::{CliError, Source};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Pipeline {
    /// Connected dominating set on K_{d,d}-free graphs.
    KddPsaks,
    /// The generic connected dominating set kernel with a chosen core.
    CdsFramework,
    /// Connected distance-r dominating set.
    RdsNowhereDense,
    /// Exact bi-kernel for (distance-r) dominating set.
    DsBikernel,
    /// Set Cover to distance-r dominating set on exact r-subdivisions.
    ReduceSetcover,
}

impl Pipeline {
    pub fn name(self) -> &'static str {
        match self {
            Pipeline::KddPsaks => "kdd-psaks",
            Pipeline::CdsFramework => "cds-framework",
            Pipeline::RdsNowhereDense => "rds-nowhere-dense",
            Pipeline::DsBikernel => "ds-bikernel",
            Pipeline::ReduceSetcover => "reduce-setcover",
        }
    }

    pub fn uses_eps(self) -> bool {
        matches!(self, Pipeline::KddPsaks | Pipeline::CdsFramework)
    }

    pub fn uses_alpha(self) -> bool {
        self == Pipeline::RdsNowhereDense
    }

    pub fn uses_d(self) -> bool {
        self == Pipeline::KddPsaks
    }
}

/// How the domination core is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CoreChoice {
    /// Exhaustive search; small graphs only.
    #[default]
    BruteForce,
    /// The K_{d,d}-free reduction (radius 1).
    Biclique,
    /// Every vertex.
    All,
}

impl std::fmt::Display for CoreChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CoreChoice::BruteForce => "brute-force",
            CoreChoice::Biclique => "biclique",
            CoreChoice::All => "all",
        })
    }
}

/// Work limits for one run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub oracle: OracleCaps,
    pub marking: MarkingCaps,
    /// Largest covering parameter `t` a kernel may use.
    pub max_t: usize,
    /// Largest graph whose weak coloring number is computed exactly.
    pub wcol_max_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { oracle: OracleCaps::default(), marking: MarkingCaps::default(), max_t: 16, wcol_max_n: 9 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub pipeline: Pipeline,
    pub source: Source,
    pub k: Option<usize>,
    pub eps: f64,
    pub alpha: f64,
    pub r: usize,
    pub d: usize,
    pub core: CoreChoice,
    pub verify: bool,
    /// Solve small optima exactly inside the lossy kernels.
    pub fallback: bool,
    pub caps: Caps,
    pub seed: u64,
    /// Set Cover outputs; derived from the source when unset.
    pub graph_out: Option<PathBuf>,
    pub roles_out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(pipeline: Pipeline, source: Source) -> Self {
        Self {
            pipeline,
            source,
            k: None,
            eps: 1.0,
            alpha: 2.0,
            r: 1,
            d: 2,
            core: CoreChoice::default(),
            verify: false,
            fallback: false,
            caps: Caps::default(),
            seed: 0,
            graph_out: None,
            roles_out: None,
        }
    }
}

/// A report plus extra files the run produced (path, contents).
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub report: RunReport,
    pub files: Vec<(PathBuf, String)>,
}

/// Executes one pipeline. Failed bound or verification checks are recorded
/// in the report; see [`RunReport::check`].
pub fn run(cfg: &RunConfig) -> Result<RunOutput, CliError> {
    if cfg.r == 0 {
        return Err(CliError::Invalid("--r must be at least 1".into()));
    }
    match cfg.pipeline {
        Pipeline::ReduceSetcover => run_set_cover(cfg),
        _ => run_kernel(cfg),
    }
}

fn provider(cfg: &RunConfig, connected: bool) -> Box<dyn CoreProvider> {
    match cfg.core {
        CoreChoice::BruteForce => Box::new(BruteForceCore { caps: cfg.caps.oracle, connected }),
        CoreChoice::Biclique => Box::new(BicliqueCore::new(cfg.d)),
        CoreChoice::All => Box::new(WholeGraphCore),
    }
}

fn check_t(t: usize, caps: &Caps) -> Result<(), CliError> {
    if t > caps.max_t {
        return Err(CliError::Cap(format!("covering parameter t = {t} is above --max-t {}", caps.max_t)));
    }
    Ok(())
}

fn kernel_output(cfg: &RunConfig, g: &Graph, k: usize) -> Result<(KernelOutput, f64), CliError> {
    let caps = &cfg.caps;
    match cfg.pipeline {
        Pipeline::KddPsaks | Pipeline::CdsFramework => {
            if cfg.r != 1 {
                return Err(CliError::Invalid(format!("{} works at radius 1", cfg.pipeline.name())));
            }
            check_t(cds_t(cfg.eps)?, caps)?;
            let config = CdsKernelConfig { marking: caps.marking, exact_fallback: cfg.fallback, oracle: caps.oracle };
            let out = if cfg.pipeline == Pipeline::KddPsaks {
                psaks_kdd(g, k, cfg.eps, cfg.d, &config)?
            } else {
                lossy_cds_kernel(g, k, cfg.eps, provider(cfg, true).as_ref(), &config)?
            };
            Ok((out, 1.0 + cfg.eps))
        }
        Pipeline::RdsNowhereDense => {
            let params = RKernelParams::new(cfg.r, cfg.alpha)?;
            check_t(params.t, caps)?;
            let config = RKernelConfig { marking: caps.marking, exact_fallback: cfg.fallback, oracle: caps.oracle };
            Ok((r_lossy_kernel(g, k, &params, provider(cfg, true).as_ref(), &config)?, cfg.alpha))
        }
        Pipeline::DsBikernel => {
            let p = provider(cfg, false);
            let out = if cfg.r == 1 {
                match p.provide(g, k, 1)? {
                    CoreOutcome::Core(z) => {
                        let mut out = ds_bikernel(g, &z, k)?;
                        out.params.core_provider = p.name();
                        out
                    }
                    CoreOutcome::Reject => {
                        let params = KernelParams { core_provider: p.name(), ..KernelParams::default() };
                        KernelOutput::negative(Objective::DominatingSet, 1, params, KernelStats::default())
                    }
                }
            } else {
                one_approx_ds_bikernel(g, k, cfg.r, p.as_ref())?
            };
            Ok((out, 1.0))
        }
        Pipeline::ReduceSetcover => unreachable!("handled by run_set_cover"),
    }
}

fn run_kernel(cfg: &RunConfig) -> Result<RunOutput, CliError> {
    let g = cfg.source.graph(cfg.seed)?;
    let k = cfg.k.ok_or_else(|| CliError::Invalid("--k is required".into()))?;
    let (out, ratio_bound) = kernel_output(cfg, &g, k)?;

    let mut bounds = Vec::new();
    if cfg.pipeline == Pipeline::KddPsaks && !out.trivial_negative {
        let z = out.params.core_size;
        let size_bound = core_size_bound(cfg.d, k);
        bounds.push(BoundCheck {
            name: "core_size".into(),
            value: z as u64,
            bound: u64::try_from(size_bound).unwrap_or(u64::MAX),
            holds: z as u128 <= size_bound,
        });
        let classes = out.stats.classes;
        let cb = class_bound(cfg.d, z);
        bounds.push(BoundCheck {
            name: "classes".into(),
            value: classes as u64,
            bound: u64::try_from(cb).unwrap_or(u64::MAX),
            holds: classes as u128 <= cb,
        });
    }

    let verification = if cfg.verify { Some(verify(cfg, &g, k, &out, ratio_bound)?) } else { None };
    let reduced = &out.reduced;
    let report = RunReport {
        schema: SCHEMA_VERSION,
        pipeline: cfg.pipeline,
        source: cfg.source.to_string(),
        seed: cfg.seed,
        input: InputStats { n: g.n(), m: g.m(), k, r: cfg.r },
        core_size: Some(out.params.core_size),
        params: Some(out.params.clone()),
        bounds,
        reduced: Some(ReducedStats {
            n: reduced.graph.n(),
            m: reduced.graph.m(),
            z: reduced.z.len(),
            k: reduced.k,
            trivial_negative: out.trivial_negative,
            objective: out.objective,
        }),
        stats: Some(out.stats.clone()),
        verification,
        diagnostics: Some(diagnostics(&g, cfg.r, &cfg.caps)?),
        set_cover: None,
        wall_time_ms: None,
    };
    Ok(RunOutput { report, files: Vec::new() })
}

fn diagnostics(g: &Graph, r: usize, caps: &Caps) -> Result<GraphDiagnostics, CliError> {
    let exact = g.n() <= caps.wcol_max_n;
    let mode = if exact { WcolMode::Exact { max_n: caps.wcol_max_n } } else { WcolMode::Greedy };
    Ok(GraphDiagnostics { degeneracy: degeneracy(g).0, wcol: wcol(g, r, mode)?.0, wcol_exact: exact })
}

/// Smallest solution of `objective` on `inst` within its budget.
fn optimum(inst: &AnnotatedInstance, objective: Objective, caps: &OracleCaps) -> Result<Option<VertexSet>, CliError> {
    let targets = if objective.targets_core() { inst.z.clone() } else { VertexSet::full(inst.graph.n()) };
    let q = DominationQuery::all(&inst.graph, inst.k).radius(inst.r).connected(objective.connected()).targets(targets);
    Ok(exact_min_dominator(&q, caps)?)
}

fn verify(
    cfg: &RunConfig,
    g: &Graph,
    k: usize,
    out: &KernelOutput,
    ratio_bound: f64,
) -> Result<Verification, CliError> {
    let caps = &cfg.caps.oracle;
    let original = AnnotatedInstance::new(g.clone(), VertexSet::full(g.n()), k, cfg.r)?;
    let opt_original = optimum(&original, out.source, caps)?.map(|d| d.len());
    let best_reduced = optimum(&out.reduced, out.objective, caps)?;
    let opt_reduced = best_reduced.as_ref().map(|s| s.len());
    let lift = best_reduced.as_ref().map(|d| lift_solution(&original, out, d));

    let mut failures = Vec::new();
    let mut realized_ratio = None;
    if let Some(l) = lift.as_ref().filter(|l| !l.valid) {
        failures.push(format!("lifted solution {:?} is not a solution of the input", l.solution.to_vec()));
    }
    match opt_original {
        Some(opt) => match (opt_reduced, lift.as_ref().and_then(|l| l.value)) {
            (Some(red), Some(value)) => {
                let ratio = value as f64 / opt.max(1) as f64;
                realized_ratio = Some(ratio);
                if value as f64 > ratio_bound * opt as f64 + 1e-9 {
                    failures.push(format!("lifted value {value} exceeds {ratio_bound} x OPT = {opt}"));
                }
                if red as f64 > ratio_bound * opt as f64 + 1e-9 {
                    failures.push(format!("reduced optimum {red} exceeds {ratio_bound} x OPT = {opt}"));
                }
            }
            _ => failures.push(format!("the input has a solution of size {opt} but the reduced instance has none")),
        },
        None if cfg.pipeline == Pipeline::DsBikernel && opt_reduced.is_some() => {
            failures.push("the reduced instance is positive but the input is negative".into());
        }
        None => {}
    }
    Ok(Verification {
        opt_original: Opt::from_min(opt_original),
        opt_reduced: Opt::from_min(opt_reduced),
        lifted_value: lift.as_ref().and_then(|l| l.value),
        lifted_valid: lift.as_ref().map(|l| l.valid),
        realized_ratio,
        ratio_bound,
        passed: failures.is_empty(),
        failures,
    })
}

fn default_stem(cfg: &RunConfig) -> PathBuf {
    match &cfg.source {
        Source::File(p) => p.with_extension(""),
        Source::Gen(g) => PathBuf::from(format!("{}-s{}", g.to_string().replace([':', ','], "-"), cfg.seed)),
    }
}

fn with_suffix(stem: &Path, suffix: &str) -> PathBuf {
    let mut s = stem.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn run_set_cover(cfg: &RunConfig) -> Result<RunOutput, CliError> {
    let sc = cfg.source.set_cover(cfg.seed, cfg.k)?;
    let red = reduce_to_rds(&sc, cfg.r)?;
    let in_class = membership_check_hp(&red.graph, cfg.r);
    let (set_cover, rds) = if cfg.verify {
        let q = DominationQuery::all(&red.graph, red.roles.k_prime).radius(cfg.r);
        let rds = Opt::from_min(exact_min_dominator(&q, &cfg.caps.oracle)?.map(|d| d.len()));
        (Some(exact_set_cover(&sc, &cfg.caps.oracle)?), Some(rds))
    } else {
        (None, None)
    };
    let agree = set_cover.zip(rds).map(|(sc, rds)| sc == rds.value().is_some());

    let stem = default_stem(cfg);
    let graph_path = cfg.graph_out.clone().unwrap_or_else(|| with_suffix(&stem, &format!(".r{}.edges", cfg.r)));
    let roles_path = cfg.roles_out.clone().unwrap_or_else(|| with_suffix(&stem, &format!(".r{}.roles.json", cfg.r)));
    let mut roles_json = serde_json::to_string_pretty(&red.roles).expect("role maps serialize");
    roles_json.push('\n');
    let files = vec![(graph_path.clone(), red.graph.to_edge_list()), (roles_path.clone(), roles_json)];

    let report = RunReport {
        schema: SCHEMA_VERSION,
        pipeline: cfg.pipeline,
        source: cfg.source.to_string(),
        seed: cfg.seed,
        input: InputStats { n: red.graph.n(), m: red.graph.m(), k: sc.k, r: cfg.r },
        params: None,
        core_size: None,
        bounds: Vec::new(),
        reduced: None,
        stats: None,
        verification: None,
        diagnostics: None,
        set_cover: Some(SetCoverReport {
            universe: sc.universe,
            families: sc.families.len(),
            k: sc.k,
            k_prime: red.roles.k_prime,
            offset: red.roles.offset,
            in_class,
            set_cover,
            rds,
            agree,
            roles: red.roles,
            graph_file: Some(graph_path.display().to_string()),
            roles_file: Some(roles_path.display().to_string()),
        }),
        wall_time_ms: None,
    };
    Ok(RunOutput { report, files })
}
