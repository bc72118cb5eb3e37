use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::{run, CliError, RunConfig, RunReport, Source};

/// Parameter lists whose Cartesian product is run. Lists a pipeline does not
/// use (for example `alphas` for `cds-framework`) are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    /// Template for every run; the swept fields are overwritten.
    pub base: RunConfig,
    pub sources: Vec<Source>,
    pub ks: Vec<usize>,
    pub rs: Vec<usize>,
    pub eps: Vec<f64>,
    pub alphas: Vec<f64>,
    pub ds: Vec<usize>,
    pub seeds: Vec<u64>,
}

/// One CSV line. Empty cells mean "not computed".
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub pipeline: String,
    pub source: String,
    pub seed: u64,
    pub k: usize,
    pub r: usize,
    pub eps: Option<f64>,
    pub alpha: Option<f64>,
    pub d: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub core_size: Option<usize>,
    pub reduced_n: Option<usize>,
    pub reduced_m: Option<usize>,
    pub trivial_negative: Option<bool>,
    pub classes: Option<usize>,
    pub opt_original: Option<String>,
    pub opt_reduced: Option<String>,
    pub lifted_value: Option<usize>,
    pub realized_ratio: Option<f64>,
    pub ratio_bound: Option<f64>,
    pub verified: Option<bool>,
    pub error: Option<String>,
}

fn sorted<T: Clone>(v: &[T], cmp: impl Fn(&T, &T) -> std::cmp::Ordering) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort_by(&cmp);
    v.dedup_by(|a, b| cmp(a, b).is_eq());
    v
}

fn or_single<T: Clone>(used: bool, v: Vec<T>) -> Vec<Option<T>> {
    if used {
        v.into_iter().map(Some).collect()
    } else {
        vec![None]
    }
}

/// Runs every configuration of the grid, in the order of the sorted keys
/// (source, `k`, `r`, `eps`, `alpha`, `d`, seed). A failing run becomes a
/// row with an `error` cell; the sweep goes on.
pub fn sweep(grid: &SweepGrid) -> Vec<SweepRow> {
    let p = grid.base.pipeline;
    let sources = sorted(&grid.sources, |a, b| a.to_string().cmp(&b.to_string()));
    let ks = sorted(&grid.ks, Ord::cmp);
    let rs = sorted(&grid.rs, Ord::cmp);
    let eps = or_single(p.uses_eps(), sorted(&grid.eps, f64::total_cmp));
    let alphas = or_single(p.uses_alpha(), sorted(&grid.alphas, f64::total_cmp));
    let ds = or_single(p.uses_d(), sorted(&grid.ds, Ord::cmp));
    let seeds = sorted(&grid.seeds, Ord::cmp);

    let mut rows = Vec::new();
    for source in &sources {
        for &k in &ks {
            for &r in &rs {
                for &e in &eps {
                    for &a in &alphas {
                        for &d in &ds {
                            for &seed in &seeds {
                                let mut cfg = grid.base.clone();
                                cfg.source = source.clone();
                                cfg.k = Some(k);
                                cfg.r = r;
                                cfg.seed = seed;
                                if let Some(e) = e {
                                    cfg.eps = e;
                                }
                                if let Some(a) = a {
                                    cfg.alpha = a;
                                }
                                if let Some(d) = d {
                                    cfg.d = d;
                                }
                                rows.push(row(&cfg, e, a, d));
                            }
                        }
                    }
                }
            }
        }
    }
    rows
}

fn row(cfg: &RunConfig, eps: Option<f64>, alpha: Option<f64>, d: Option<usize>) -> SweepRow {
    let mut row = SweepRow {
        pipeline: cfg.pipeline.name().into(),
        source: cfg.source.to_string(),
        seed: cfg.seed,
        k: cfg.k.unwrap_or(0),
        r: cfg.r,
        eps,
        alpha,
        d,
        n: None,
        m: None,
        core_size: None,
        reduced_n: None,
        reduced_m: None,
        trivial_negative: None,
        classes: None,
        opt_original: None,
        opt_reduced: None,
        lifted_value: None,
        realized_ratio: None,
        ratio_bound: None,
        verified: None,
        error: None,
    };
    match run(cfg) {
        Ok(out) => fill(&mut row, &out.report),
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

fn fill(row: &mut SweepRow, report: &RunReport) {
    row.n = Some(report.input.n);
    row.m = Some(report.input.m);
    row.core_size = report.core_size;
    if let Some(red) = &report.reduced {
        row.reduced_n = Some(red.n);
        row.reduced_m = Some(red.m);
        row.trivial_negative = Some(red.trivial_negative);
    }
    row.classes = report.stats.as_ref().map(|s| s.classes);
    if let Some(v) = &report.verification {
        row.opt_original = Some(v.opt_original.cell());
        row.opt_reduced = Some(v.opt_reduced.cell());
        row.lifted_value = v.lifted_value;
        row.realized_ratio = v.realized_ratio;
        row.ratio_bound = Some(v.ratio_bound);
    }
    if let Some(sc) = &report.set_cover {
        row.opt_reduced = sc.rds.map(|o| o.cell());
    }
    let checked = report.verification.is_some() || report.set_cover.as_ref().is_some_and(|s| s.agree.is_some());
    match report.check() {
        Ok(()) => row.verified = checked.then_some(true),
        Err(e) => {
            row.verified = Some(false);
            row.error = Some(e.to_string());
        }
    }
}

/// Writes rows as CSV with a header. No rows, no output.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Invalid(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
