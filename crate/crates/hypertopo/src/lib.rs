//! Hyperedge sets, their intersected graphs, every-zero groups and
//! parameterized colorings.

pub mod colorings;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod groups;
pub mod hyperset;
pub mod intersected;
pub mod io;
pub mod treeforest;

pub use error::{Error, Result};
