//! Approximate kernels for connected distance-`r` domination.
//!
//! The pipeline finds a connected `(k, r)`-domination core `Z`
//! ([`connected_core`]), sorts all other vertices by their `r`-projection
//! profile on `Z` ([`ProfileClasses`]), and keeps `Z`, one minimum group
//! Steiner tree for every small set of profile classes, and shortest paths
//! that preserve the profile of every tree terminal ([`build_reduced_graph`]).
//! [`r_lossy_kernel`] packages the result as an annotated instance;
//! [`one_approx_ds_bikernel`] is the exact variant for plain distance-`r`
//! domination.
//!
//! ```
//! use distance_r_kernel::{r_lossy_kernel, RKernelConfig, RKernelParams};
//! use framework::BruteForceCore;
//! use graph_core::generators::cycle;
//!
//! // A connected set of s vertices 2-dominates s + 4 vertices of a cycle.
//! let g = cycle(12);
//! let params = RKernelParams::new(2, 3.0).unwrap();
//! let out = r_lossy_kernel(&g, 8, &params, &BruteForceCore::default(), &RKernelConfig::default()).unwrap();
//! assert!(!out.trivial_negative);
//! assert!(out.reduced.graph.n() <= 12);
//! ```

mod core;
mod dot;
mod kernel;
mod profile;
mod reduced;

pub use crate::core::{connected_core, ConnectedCore};
pub use dot::{build_dot_graph, DotGraph};
pub use kernel::{one_approx_ds_bikernel, r_lift, r_lossy_kernel, RKernelConfig, RKernelParams};
pub use profile::{profile_paths, ProfileClass, ProfileClasses};
pub use reduced::{build_reduced_graph, ReducedGraph};
