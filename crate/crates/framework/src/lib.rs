//! The general lossy-kernel machinery for connected domination.
//!
//! * [`covering_family`] takes a connected dominator apart into small
//!   connected pieces.
//! * [`connect_dominator`] glues a disconnected dominator back together.
//! * [`core_partition`] groups vertices by their neighbourhood in a core.
//! * [`lossy_cds_kernel`] marks optimal group Steiner trees for every small
//!   family of groups and outputs the induced subgraph on the marked vertices.
//! * [`lift_solution`] maps a solution of the reduced instance back.

mod connector;
mod core_provider;
mod covering;
mod error;
mod instance;
mod kernel;
mod marking;
mod partition;

pub use connector::{connect_dominator, Connection};
pub use core_provider::{BruteForceCore, CoreOutcome, CoreProvider, FixedCore, WholeGraphCore};
pub use covering::{covering_family, CoveringFamily};
pub use error::FrameworkError;
pub use instance::{lift_solution, AnnotatedInstance, KernelOutput, KernelParams, KernelStats, LiftReport, Objective};
pub use kernel::{cds_t, ds_bikernel, lossy_cds_kernel, CdsKernelConfig};
pub use marking::{mark_group_trees, MarkedTree, Marking, MarkingCaps};
pub use partition::{core_partition, CorePartition};
