//! Driver for the kernel pipelines: builds instances from files or
//! generators, runs a pipeline, optionally checks it against the exact
//! oracles and reports the outcome as JSON (single runs) or CSV (sweeps).

mod error;
mod pipeline;
pub mod report;
mod source;
mod sweep;

pub use error::CliError;
pub use pipeline::{run, Caps, CoreChoice, Pipeline, RunConfig, RunOutput};
pub use report::{RunReport, SCHEMA_VERSION};
pub use source::{GenSpec, Source, GENERATORS};
pub use sweep::{sweep, write_csv, SweepGrid, SweepRow};

// The book's chapters are compiled and run as doctests of this crate, which
// sees every library of the workspace.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/cds-kernel.md")]
    mod cds_kernel {}
    #[doc = include_str!("../../../book/src/biclique-free.md")]
    mod biclique_free {}
    #[doc = include_str!("../../../book/src/sparse-structure.md")]
    mod sparse_structure {}
    #[doc = include_str!("../../../book/src/distance-r.md")]
    mod distance_r {}
    #[doc = include_str!("../../../book/src/reductions.md")]
    mod reductions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
