//! Beta-reputation local trust and iterative global trust propagation.
//!
//! Each agent keeps a [`ReputationRecord`] per peer: evidence counters
//! `(r, s)` with geometric forgetting. Local trust is the Beta posterior
//! mean `(r + 1) / (r + s + 2)`. Global trust refines local opinions by a
//! trust-weighted recursion over neighbors, iterated to a fixed point over
//! the communication graph.

mod global;
mod graph;
mod matrix;
mod reputation;

pub use global::{global_trust_fixed_point, global_trust_step, trust_weights, FixedPoint};
pub use graph::CommGraph;
pub use matrix::TrustMatrix;
pub use reputation::{ForgettingFactors, ReputationRecord};
