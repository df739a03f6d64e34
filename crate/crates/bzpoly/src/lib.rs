//! Command-line driver, sweeps, benchmarks and file formats on top of
//! [`bzpoly_core`].

pub mod bench;
pub mod cli;
pub mod format;
pub mod grid;
pub mod query;
pub mod sweep;

pub use bzpoly_core as core;
