//! Exact search kernels.

mod coloring;
mod mis;
mod sparsity;
mod zarankiewicz;

use std::time::Duration;

use serde::Serialize;

pub use coloring::{chi_lower_bound, greedy_color, is_proper_coloring};
pub use mis::{
    is_independent, max_blue_clique_equals_alpha, max_independent_set, MisOptions,
    DEFAULT_EXACT_CEILING,
};
pub use sparsity::{
    allowed_edges, charge_edges, sparsity_check, ChargeTally, Charger, ModeKind, SparsityMode,
    SparsityVerdict, SubsetWitness, DEFAULT_SAMPLE_SEED, EXHAUSTIVE_SPARSITY_CEILING,
};
pub use zarankiewicz::{
    partite_base, partite_host, zarankiewicz_max, Forbidden, ZarankiewiczOptions,
    DEFAULT_ZARANKIEWICZ_CEILING,
};

use crate::hypergraph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum SolveWitness {
    VertexSet(Vec<Vertex>),
    EdgeSet(Vec<Vec<Vertex>>),
    /// `coloring[v]` is the color of vertex `v`.
    Coloring(Vec<u32>),
}

/// Optimum with a certificate and search statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub optimum: u64,
    pub witness: SolveWitness,
    pub nodes_explored: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl SolveResult {
    pub fn vertex_set(&self) -> Option<&[Vertex]> {
        match &self.witness {
            SolveWitness::VertexSet(v) => Some(v),
            _ => None,
        }
    }
}
