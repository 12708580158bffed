//! Sombor index of cacti.
//!
//! Computes the Sombor index `SO(G) = Σ_{uv ∈ E} √(d_u² + d_v²)`, builds
//! the extremal cacti that maximize it (in general and under a perfect
//! matching constraint), enumerates all non-isomorphic cacti of small
//! order, and checks the closed-form maxima against exhaustive search.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod invariants;
pub mod numfmt;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
