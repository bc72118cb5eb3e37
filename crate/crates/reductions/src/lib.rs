//! Set Cover to distance-`r` Dominating Set on exact `r`-subdivisions.
//!
//! [`reduce_to_rds`] builds the guard gadget: the element/set incidence graph,
//! a guard adjacent to every set vertex and a pendant on the guard, with every
//! edge replaced by a path of length `r`; the budget becomes `k + 1`.
//! [`membership_check_hp`] recognises exact `p`-subdivisions of simple graphs,
//! and [`equivalence_sweep`] compares both sides with the exact oracles.
//!
//! ```
//! use reductions::{membership_check_hp, reduce_to_rds, SetCoverInstance};
//!
//! let sc = SetCoverInstance::new(2, vec![vec![0, 1]], 1).unwrap();
//! let red = reduce_to_rds(&sc, 2).unwrap();
//! assert_eq!(red.roles.k_prime, 2);
//! assert!(membership_check_hp(&red.graph, 2));
//! ```

mod gadget;
mod recognize;
mod sweep;

pub use gadget::{connected_variant_check, reduce_to_rds, ConnectedCheck, Reduction, RoleMap, BUDGET_OFFSET};
pub use oracles::SetCoverInstance;
pub use recognize::{membership_check_hp, subdivision_base, touched_base_vertices, SubdivisionBase};
pub use sweep::{all_instances, check_instance, equivalence_sweep, EquivalenceRow, SweepSummary};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Oracle(#[from] oracles::OracleError),
}
