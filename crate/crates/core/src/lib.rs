//! Chromatic polynomials, acyclic orientations, heaps of pieces and the
//! reciprocity identities that tie them together, in exact arithmetic.

pub mod budget;
pub mod chromatic;
pub mod error;
pub mod family;
pub mod graph;
pub mod heaps;
pub mod orientations;
pub mod partition;
pub mod poly;
pub mod reciprocity;
pub mod report;
pub mod subset;
pub mod symfunc;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{ExponentVector, Graph, VertexSet};
pub use partition::Partition;
pub use poly::{IntPolynomial, RatPolynomial};
