//! Standard-library companion to `stochastik-core`: OS entropy, stream and
//! trajectory file formats, and the `stochastik` command-line tool.

pub mod cli;
pub mod entropy;
pub mod export;

pub use stochastik_core as core;
