use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use kernel_cli::{run, sweep, write_csv, Caps, CliError, CoreChoice, Pipeline, RunConfig, Source, SweepGrid};

#[derive(Parser)]
#[command(name = "kernel", version, about = "Lossy kernels for connected domination, with exact verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Connected dominating set on K_{d,d}-free graphs.
    KddPsaks(RunArgs),
    /// Generic connected dominating set kernel with a chosen core.
    CdsFramework(RunArgs),
    /// Connected distance-r dominating set.
    RdsNowhereDense(RunArgs),
    /// Exact bi-kernel for (distance-r) dominating set.
    DsBikernel(RunArgs),
    /// Set Cover to distance-r dominating set; writes the graph and its role map.
    ReduceSetcover(RunArgs),
    /// Cartesian product of parameter lists, one CSV row per run.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct CapArgs {
    /// Largest graph handed to the exhaustive oracles (at most 64) [default: 30].
    #[arg(long)]
    oracle_max_n: Option<usize>,
    /// Largest group count of one Steiner table [default: 14].
    #[arg(long)]
    max_groups: Option<usize>,
    /// Largest number of candidate sets one oracle call may inspect [default: 2^28].
    #[arg(long)]
    max_subsets: Option<u64>,
    /// Largest group subset solved on its own while marking [default: 14].
    #[arg(long)]
    max_group_subset: Option<usize>,
    /// Largest number of group subsets solved while marking [default: 2000000].
    #[arg(long)]
    max_evaluations: Option<u64>,
    /// Largest covering parameter t [default: 16].
    #[arg(long)]
    max_t: Option<usize>,
    /// Largest graph whose weak coloring number is computed exactly [default: 9].
    #[arg(long)]
    wcol_max_n: Option<usize>,
}

impl CapArgs {
    fn resolve(&self) -> Caps {
        let mut caps = Caps::default();
        let mut line = Vec::new();
        macro_rules! cap {
            ($flag:literal, $arg:expr, $field:expr) => {
                match $arg {
                    Some(v) => {
                        $field = v;
                        line.push(format!("{}={}", $flag, v));
                    }
                    None => line.push(format!("{}={} (default)", $flag, $field)),
                }
            };
        }
        cap!("oracle-max-n", self.oracle_max_n, caps.oracle.max_n);
        cap!("max-groups", self.max_groups, caps.oracle.max_groups);
        cap!("max-subsets", self.max_subsets, caps.oracle.max_subsets);
        cap!("max-group-subset", self.max_group_subset, caps.marking.max_subset_size);
        cap!("max-evaluations", self.max_evaluations, caps.marking.max_evaluations);
        cap!("max-t", self.max_t, caps.max_t);
        cap!("wcol-max-n", self.wcol_max_n, caps.wcol_max_n);
        eprintln!("kernel: caps {}", line.join(" "));
        caps
    }
}

#[derive(Args)]
struct RunArgs {
    /// Input file: edge list, or the Set Cover format for reduce-setcover.
    #[arg(long = "in", conflicts_with = "gen", required_unless_present = "gen")]
    input: Option<PathBuf>,
    /// Generator, e.g. grid_apex:2,6 or setcover:4,3.
    #[arg(long)]
    gen: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum)]
    core: Option<CoreChoice>,
    /// Compare with the exact oracles; a failed check exits with code 4.
    #[arg(long)]
    verify: bool,
    /// Solve small optima exactly inside the lossy kernels.
    #[arg(long)]
    fallback: bool,
    #[arg(long, env = "KERNEL_SEED")]
    seed: Option<u64>,
    /// Report path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add the wall time to the report (it is always printed to stderr).
    #[arg(long)]
    timing: bool,
    /// reduce-setcover: edge list output.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    /// reduce-setcover: role map output.
    #[arg(long)]
    roles_out: Option<PathBuf>,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(value_enum)]
    pipeline: Pipeline,
    /// Generator; repeat for several.
    #[arg(long)]
    gen: Vec<String>,
    /// Input file; repeat for several.
    #[arg(long = "in")]
    input: Vec<PathBuf>,
    /// Comma-separated lists. An empty list gives an empty sweep.
    #[arg(long)]
    k: String,
    #[arg(long, default_value = "1")]
    r: String,
    #[arg(long, default_value = "1")]
    eps: String,
    #[arg(long, default_value = "2")]
    alpha: String,
    #[arg(long, default_value = "2")]
    d: String,
    #[arg(long, env = "KERNEL_SEED", default_value = "0")]
    seed: String,
    #[arg(long, value_enum)]
    core: Option<CoreChoice>,
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    fallback: bool,
    /// CSV path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    caps: CapArgs,
}

fn list<T: FromStr>(flag: &str, s: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Invalid(format!("--{flag}: cannot parse {t:?}"))))
        .collect()
}

fn loud<T: std::fmt::Display>(flag: &str, given: Option<T>, default: T) -> T {
    given.unwrap_or_else(|| {
        eprintln!("kernel: --{flag} not given, using {default}");
        default
    })
}

fn run_config(pipeline: Pipeline, a: &RunArgs) -> Result<RunConfig, CliError> {
    let source = match (&a.input, &a.gen) {
        (Some(p), _) => Source::File(p.clone()),
        (None, Some(g)) => Source::Gen(g.parse()?),
        (None, None) => return Err(CliError::Invalid("one of --in or --gen is required".into())),
    };
    let mut cfg = RunConfig::new(pipeline, source);
    cfg.k = a.k;
    if pipeline.uses_eps() {
        cfg.eps = loud("eps", a.eps, cfg.eps);
    }
    if pipeline.uses_alpha() {
        cfg.alpha = loud("alpha", a.alpha, cfg.alpha);
    }
    if pipeline.uses_d() || a.core == Some(CoreChoice::Biclique) {
        cfg.d = loud("d", a.d, cfg.d);
    }
    cfg.r = a.r.unwrap_or(1);
    if pipeline != Pipeline::KddPsaks && pipeline != Pipeline::ReduceSetcover {
        cfg.core = loud("core", a.core, CoreChoice::BruteForce);
    }
    cfg.verify = a.verify;
    cfg.fallback = a.fallback;
    cfg.seed = loud("seed", a.seed, 0);
    cfg.caps = a.caps.resolve();
    cfg.graph_out = a.graph_out.clone();
    cfg.roles_out = a.roles_out.clone();
    Ok(cfg)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn single(pipeline: Pipeline, a: &RunArgs) -> Result<(), CliError> {
    let cfg = run_config(pipeline, a)?;
    let start = Instant::now();
    let mut output = run(&cfg)?;
    let elapsed = start.elapsed();
    eprintln!("kernel: {} finished in {:.3} s", pipeline.name(), elapsed.as_secs_f64());
    if a.timing {
        output.report.wall_time_ms = Some(elapsed.as_millis() as u64);
    }
    for (path, contents) in &output.files {
        fs::write(path, contents)?;
        eprintln!("kernel: wrote {}", path.display());
    }
    emit(&a.out, &output.report.to_json())?;
    output.report.check()
}

fn run_sweep(a: &SweepArgs) -> Result<(), CliError> {
    let mut sources: Vec<Source> = a.input.iter().cloned().map(Source::File).collect();
    for g in &a.gen {
        sources.push(Source::Gen(g.parse()?));
    }
    let mut base = RunConfig::new(a.pipeline, sources.first().cloned().unwrap_or(Source::File(PathBuf::new())));
    base.core = a.core.unwrap_or_default();
    base.verify = a.verify;
    base.fallback = a.fallback;
    base.caps = a.caps.resolve();
    let grid = SweepGrid {
        base,
        sources,
        ks: list("k", &a.k)?,
        rs: list("r", &a.r)?,
        eps: list("eps", &a.eps)?,
        alphas: list("alpha", &a.alpha)?,
        ds: list("d", &a.d)?,
        seeds: list("seed", &a.seed)?,
    };
    let start = Instant::now();
    let rows = sweep(&grid);
    eprintln!("kernel: {} sweep rows in {:.3} s", rows.len(), start.elapsed().as_secs_f64());
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    emit(&a.out, std::str::from_utf8(&buf).expect("csv is utf-8"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::KddPsaks(a) => single(Pipeline::KddPsaks, a),
        Command::CdsFramework(a) => single(Pipeline::CdsFramework, a),
        Command::RdsNowhereDense(a) => single(Pipeline::RdsNowhereDense, a),
        Command::DsBikernel(a) => single(Pipeline::DsBikernel, a),
        Command::ReduceSetcover(a) => single(Pipeline::ReduceSetcover, a),
        Command::Sweep(a) => run_sweep(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kernel: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
