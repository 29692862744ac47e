use std::time::Instant;

use super::{SolveResult, SolveWitness};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Greedy proper coloring: vertices by decreasing degree (lowest id first on
/// ties), each taking the smallest color that closes no monochromatic edge.
/// Fails only for 1-uniform hypergraphs with edges, which have no proper coloring.
pub fn greedy_color(h: &Hypergraph) -> Result<SolveResult> {
    if h.uniformity() == 1 && h.num_edges() > 0 {
        return Err(Error::InvalidParameter(
            "a 1-uniform edge cannot be properly colored".into(),
        ));
    }
    let start = Instant::now();
    let n = h.num_vertices();
    let deg = h.degrees();
    let inc = h.incidence();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    const NONE: u32 = u32::MAX;
    let mut color = vec![NONE; n];
    let mut steps = 0u64;
    for v in order {
        let mut c = 0u32;
        loop {
            steps += 1;
            let closes = inc[v].iter().any(|&ei| {
                h.edge(ei as usize)
                    .iter()
                    .all(|&u| u as usize == v || color[u as usize] == c)
            });
            if !closes {
                break;
            }
            c += 1;
        }
        color[v] = c;
    }
    let used = color.iter().map(|&c| c + 1).max().unwrap_or(0);
    Ok(SolveResult {
        optimum: used as u64,
        witness: SolveWitness::Coloring(color),
        nodes_explored: steps,
        elapsed: start.elapsed(),
    })
}

pub fn is_proper_coloring(h: &Hypergraph, coloring: &[u32]) -> bool {
    coloring.len() == h.num_vertices()
        && h.edges().all(|e| {
            e.iter()
                .any(|&v| coloring[v as usize] != coloring[e[0] as usize])
        })
}

/// `ceil(N / alpha)`: every color class is independent, so at least this
/// many classes are needed.
pub fn chi_lower_bound(h: &Hypergraph, alpha: u64) -> Result<u64> {
    if alpha == 0 {
        return Err(Error::InvalidParameter("alpha must be positive".into()));
    }
    Ok((h.num_vertices() as u64).div_ceil(alpha))
}
