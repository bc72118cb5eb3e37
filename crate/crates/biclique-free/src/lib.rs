//! Shrinking a domination core on `K_{d,d}`-free graphs, one vertex at a time,
//! and the `(1 + eps)`-approximate connected dominating set kernel built on it.
//!
//! ```
//! use biclique_free::{compute_core, CoreComputation};
//! use graph_core::generators::star;
//!
//! let g = star(12);
//! let CoreComputation::Core { z, removed } = compute_core(&g, 1, 2).unwrap() else { unreachable!() };
//! assert!(z.len() <= 5);
//! assert_eq!(z.len() + removed.len(), 13);
//! ```

mod core;
mod error;

pub use crate::core::{
    class_bound, compute_core, core_size_bound, psaks_kdd, reduce_core_once, reduce_core_step, BicliqueCore, ChainStep,
    CoreComputation, CoreReductionTrace, Verdict,
};
pub use error::BicliqueError;
