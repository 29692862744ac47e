//! Constructions of extremal hypergraph families and machine-checked
//! certificates for their properties: forbidden-configuration freeness,
//! exact independence numbers, Zarankiewicz numbers, sparsity, and Ramsey
//! lower-bound colorings.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod grid;
pub mod hypergraph;
pub mod patterns;
mod ratio_serde;
pub mod search;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
pub use grid::GridIndexer;
pub use hypergraph::{
    connected_components, validate, DegreeStats, Hypergraph, HypergraphData, Vertex, Violation,
};
pub use patterns::{Pattern, PatternRef};
pub use search::{contains_pattern, SearchOutcome, Witness};
