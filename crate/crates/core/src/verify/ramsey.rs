use itertools::Itertools;
use serde::Serialize;

use super::{binomial, Evidence, VerifyOptions};
use crate::constructions::build_h2;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::patterns::PatternRef;
use crate::search::{IndexedHost, PatternSearch, SearchOutcome};
use crate::solvers::{max_blue_clique_equals_alpha, MisOptions};

/// A red/blue coloring of all triples of `[n^2]`, red being the listed
/// edges, checked for a red `P_4` and for the largest blue clique.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RamseyCertificate {
    pub n: usize,
    pub num_vertices: usize,
    /// Blue clique size the coloring must avoid, `2n`.
    pub clique_size: usize,
    pub red_edges: Vec<Vec<Vertex>>,
    pub blue_triples: u64,
    /// `no_copy`, or a red `P_4`.
    pub red_path: Evidence,
    pub max_blue_clique: u64,
    pub blue_clique: Vec<Vertex>,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion: Option<String>,
}

impl RamseyCertificate {
    /// Direct check that every triple inside `blue_clique` is blue.
    pub fn blue_clique_holds(&self) -> bool {
        let mut clique = self.blue_clique.clone();
        clique.sort_unstable();
        clique.iter().all_unique()
            && clique
                .iter()
                .copied()
                .tuple_combinations()
                .all(|(a, b, c)| self.red_edges.binary_search(&vec![a, b, c]).is_err())
    }
}

/// The coloring with red = `H2(n)`.
pub fn ramsey_lower_witness(n: usize, options: &VerifyOptions) -> Result<RamseyCertificate> {
    ramsey_certificate(&build_h2(n)?, n, options)
}

/// Certificate for an arbitrary red 3-graph on `n^2` vertices.
pub fn ramsey_certificate(
    red: &Hypergraph,
    n: usize,
    options: &VerifyOptions,
) -> Result<RamseyCertificate> {
    let big_n = n * n;
    if red.uniformity() != 3 || red.num_vertices() != big_n {
        return Err(Error::InvalidParameter(format!(
            "red hypergraph must be 3-uniform on {big_n} vertices"
        )));
    }
    let pattern = PatternRef::TightPath { s: 4 };
    let p = pattern.build()?;
    let host = IndexedHost::new(red);
    let mut search = PatternSearch::new(&host, &p)?;
    let red_path = match search.run() {
        SearchOutcome::Found(witness) => Evidence::Copy { pattern, witness },
        _ => Evidence::NoCopy {
            pattern,
            nodes_explored: search.nodes_explored(),
        },
    };
    let blue = max_blue_clique_equals_alpha(
        red,
        &MisOptions {
            ceiling: options.exact_ceiling,
        },
    )?;
    let clique_size = 2 * n;
    let certified =
        matches!(red_path, Evidence::NoCopy { .. }) && blue.optimum < clique_size as u64;
    Ok(RamseyCertificate {
        n,
        num_vertices: big_n,
        clique_size,
        red_edges: red.edges().map(|e| e.to_vec()).collect(),
        blue_triples: (binomial(big_n as u64, 3).expect("small") - red.num_edges() as u128) as u64,
        red_path,
        max_blue_clique: blue.optimum,
        blue_clique: blue.vertex_set().expect("vertex set").to_vec(),
        certified,
        conclusion: certified.then(|| format!("r(P_4, {clique_size}) > {big_n}")),
    })
}
