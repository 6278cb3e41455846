//! Counting extensions of abstract argumentation frameworks by dynamic
//! programming over tree decompositions.
//!
//! The pipeline: build a nice tree decomposition of the attack graph,
//! run a semantics-specific table algorithm bottom-up, purge rows that
//! reach no accepted root row, then count (optionally projected onto a
//! set of arguments). A brute-force [`oracle`] is included for checking.

pub mod argset;
pub mod checks;
pub mod cli;
pub mod dp;
pub mod error;
pub mod formats;
pub mod framework;
pub mod generate;
pub mod oracle;
pub mod pipeline;
pub mod projection;
pub mod reductions;
pub mod semantics;
pub mod td;

pub use argset::ArgSet;
pub use error::{Error, Result};
pub use framework::{ArgumentationFramework, SemanticsKind, DEFAULT_ORACLE_CAP};
