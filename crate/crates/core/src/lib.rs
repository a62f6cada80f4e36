//! Complexity metrics for Boolean category structures.
//!
//! A category structure splits the `2^d` stimuli of `d` binary dimensions
//! into categories A and B. This crate measures how hard such a split is to
//! learn in three ways:
//!
//! * [`infocomp`]: remaining classification entropy after fixing `n`
//!   dimensions, aggregated per level by `min` or `mean` and summed.
//! * [`boolcomp`]: literal count of a minimal DNF for A.
//! * [`gist`]: per-dimension invariance proportions and their norm.
//!
//! [`structures`] handles parsing, symmetry orbits and class enumeration,
//! [`stats`] turns metric values into orderings and correlations against
//! human error rates, and [`report`] assembles command output documents.

pub mod boolcomp;
pub mod catalog;
pub mod error;
pub mod gist;
pub mod infocomp;
pub mod output;
pub mod report;
pub mod stats;
pub mod structures;

pub use error::{Error, ErrorKind, Result};
pub use infocomp::{aggregate_metric, Aggregator, LevelProfile};
pub use structures::{enumerate_classes, CategoryStructure};
