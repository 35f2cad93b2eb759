//! Logical depth and width of finite graphs.
//!
//! The crate bundles exact Ehrenfeucht game solvers, the k-dimensional
//! Weisfeiler-Lehman refinement (with and without counting), a first-order
//! formula language with a model checker, emitters for defining sentences,
//! and a handful of graph constructions with unusually short definitions.

pub mod analysis;
pub mod constructions;
pub mod emit;
pub mod error;
pub mod games;
pub mod graph;
pub mod logic;
pub mod rng;
pub mod value;
pub mod wl;

pub use error::{Error, Result};
pub use graph::Graph;
pub use logic::Formula;
pub use value::GameValue;
