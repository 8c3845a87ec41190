//! Exact enumeration, statistics, bijections, and q-polynomial
//! identities for two-row row-increasing tableaux and Schröder paths.
//!
//! The runnable programs under `examples/` are the primary interface:
//! each one demonstrates a major capability end to end. The `rowinc`
//! binary exposes the same operations as a command-line tool.

pub mod bijections;
pub mod cli;
pub mod error;
pub mod qpoly;
pub mod schroeder;
pub mod stats;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use qpoly::QPoly;
pub use schroeder::{PathStep, SchroederPath, SchroederWord};
pub use stats::StatProfile;
pub use tableaux::{GeneralTableau, Partition, Tableau, TableauClass};
