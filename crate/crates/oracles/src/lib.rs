//! Exact solvers used as ground truth and, for group Steiner trees, inside
//! the kernels themselves.
//!
//! Every routine has a hard work cap ([`OracleCaps`]) and fails with
//! [`OracleError::CapExceeded`] instead of running away or guessing.
//!
//! Ties between minimum solutions are broken towards the colexicographically
//! smallest set: the one minimizing `sum 2^v`, i.e. with the smallest largest
//! vertex, then the smallest second-largest, and so on.

mod bits;
mod caps;
mod domination;
mod set_cover;
mod steiner;

pub use caps::{OracleCaps, OracleError};
pub use domination::{domination_core_violation, exact_min_dominator, is_domination_core, DominationQuery};
pub use set_cover::{exact_set_cover, parse_set_cover, SetCoverInstance};
pub use steiner::{
    exact_group_steiner_tree, exact_steiner_tree, group_steiner_dp, GroupSteinerTable, SteinerMode, SteinerQuery,
    SteinerSolution,
};
