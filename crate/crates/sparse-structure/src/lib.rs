//! Structural tools for sparse graphs.
//!
//! * [`projection`] and [`profile`]: which vertices of a set `X` a vertex
//!   reaches within distance `r` without passing through `X` first.
//! * [`closure`]: grow `X` until every outside vertex has a small projection.
//! * [`exchange_improve`] and [`is_exchange_core`]: local exchanges that
//!   shrink a dominator without disconnecting it.
//! * [`tree_closure`]: a superset of `X` that keeps every small Steiner tree
//!   between vertices of `X`.
//! * [`wreach`], [`wcol`] and [`wcol_separator_check`]: weak reachability
//!   under a linear order and the weak coloring numbers.

mod bits;
mod closure;
mod diagnostics;
mod error;
mod exchange;
mod projection;
mod tree_closure;
mod wcol;

pub use closure::{closure, ClosureBudget, ClosureReport};
pub use diagnostics::{diagnostics, Diagnostics};
pub use error::SparseError;
pub use exchange::{
    exchange_core_violation, exchange_improve, find_exchange, is_exchange_core, Exchange, ExchangeOutcome,
};
pub use projection::{max_projection_size, profile, projection, Projection, ProjectionProfile};
pub use tree_closure::{tree_closure, TreeClosure};
pub use wcol::{wcol, wcol_separator_check, wreach, wreach_all, OrderedGraph, SeparatorCheck, WcolMode};
