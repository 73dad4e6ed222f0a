//! Coloring of signed multigraphs: switching and balance, block structure,
//! signed and list colorings, degree bounds, and exhaustive verification over
//! small graph classes.
#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod coloring;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
pub mod list_coloring;
mod solver;
pub mod structure;

pub use coloring::{ColorSet, SignedColoring};
pub use enumeration::{EnumSpec, Equivalence};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Sign, SignedGraph, VertexId, VertexSet};
pub use list_coloring::ListAssignment;
