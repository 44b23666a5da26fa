//! Exact solving of Cops and Robbers variants (classic, with protected edges,
//! and with lazy cops), the Alternating Boolean Formula game, and the two
//! polynomial-time constructions that chain them together:
//!
//! * [`reduce::lazy_to_protected`] compiles a lazy-cops instance into an
//!   equivalent protected-edge instance with the same number of cops;
//! * [`reduce::abf_to_lazy`] compiles an ABF instance into a lazy-cops
//!   instance with `m + n + 3` cops.
//!
//! [`verify`] holds independent oracles and the randomized/exhaustive suites
//! that check both constructions against the solver.

pub mod abf;
pub mod error;
pub mod game;
pub mod graph;
pub mod reduce;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use game::{Configuration, CopPositions, Turn, Variant};
pub use graph::{PGraph, Protection, VertexId};
pub use solver::{compute_region, cop_number, decide, ConfigSpace, Winner, WinRegion};
