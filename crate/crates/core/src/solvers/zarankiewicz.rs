//! Exhaustive Zarankiewicz numbers: the largest k-partite k-uniform edge
//! set on parts of size n avoiding a forbidden configuration.
//!
//! Base vertex `(part i, value v)` (both 1-based) has id `(i-1)*n + (v-1)`
//! and label `[i, v]`. Candidate edges are the `n^k` transversals in
//! lexicographic tuple order. The search is depth-first, include before
//! exclude, and rejects an edge as soon as it completes a forbidden copy.

use std::time::Instant;

use itertools::Itertools;

use super::{SolveResult, SolveWitness};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::patterns::{some_set_covered, Pattern};
use crate::search::{GrowingHost, PatternSearch};

pub const DEFAULT_ZARANKIEWICZ_CEILING: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Forbidden {
    Pattern(Pattern),
    /// Four 3-edges, one inside the union of the other three.
    UnionContainment,
}

impl Forbidden {
    fn uniformity(&self) -> usize {
        match self {
            Forbidden::Pattern(p) => p.uniformity(),
            Forbidden::UnionContainment => 3,
        }
    }

    /// Whether `host` (whose last edge is `added`) contains a copy using `added`.
    fn completed_by(&self, host: &GrowingHost, added: &[Vertex]) -> bool {
        match self {
            Forbidden::Pattern(p) => PatternSearch::new(host, p)
                .expect("uniformity checked up front")
                .through(added.to_vec())
                .run()
                .is_found(),
            Forbidden::UnionContainment => {
                let others = &host.edges()[..host.len() - 1];
                others.iter().tuple_combinations().any(|(a, b, c)| {
                    some_set_covered(&[added.to_vec(), a.clone(), b.clone(), c.clone()])
                })
            }
        }
    }

    /// Whether `host` contains a copy anywhere.
    pub fn occurs_in(&self, host: &Hypergraph) -> Result<bool> {
        match self {
            Forbidden::Pattern(p) => Ok(crate::search::contains_pattern(host, p, None)?.is_found()),
            Forbidden::UnionContainment => {
                let edges: Vec<Vec<Vertex>> = host.edges().map(|e| e.to_vec()).collect();
                Ok(edges.iter().tuple_combinations().any(|(a, b, c, d)| {
                    some_set_covered(&[a.clone(), b.clone(), c.clone(), d.clone()])
                }))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZarankiewiczOptions {
    /// Largest allowed number of candidate edges `n^k`.
    pub ceiling: usize,
}

impl Default for ZarankiewiczOptions {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_ZARANKIEWICZ_CEILING,
        }
    }
}

/// Labels `[part, value]` for the `k*n` base vertices and the candidate
/// transversal edges in lexicographic tuple order.
pub fn partite_base(k: usize, n: usize) -> (Vec<Vec<u32>>, Vec<Vec<Vertex>>) {
    let labels = (1..=k as u32)
        .flat_map(|i| (1..=n as u32).map(move |v| vec![i, v]))
        .collect();
    let candidates = (0..k)
        .map(|_| 0..n as u32)
        .multi_cartesian_product()
        .map(|t| {
            t.iter()
                .enumerate()
                .map(|(i, &v)| (i * n) as Vertex + v)
                .collect()
        })
        .collect();
    (labels, candidates)
}

/// The labeled k-partite hypergraph with the given base-vertex edges.
pub fn partite_host(k: usize, n: usize, edges: &[Vec<Vertex>]) -> Result<Hypergraph> {
    let (labels, _) = partite_base(k, n);
    Hypergraph::new(k, k * n, edges)?.with_labels(labels)
}

pub fn zarankiewicz_max(
    k: usize,
    n: usize,
    forbidden: &Forbidden,
    options: &ZarankiewiczOptions,
) -> Result<SolveResult> {
    if k < 1 || n < 1 {
        return Err(Error::InvalidParameter(format!(
            "need k, n >= 1 (got k={k}, n={n})"
        )));
    }
    if forbidden.uniformity() != k {
        return Err(Error::UniformityMismatch {
            expected: k,
            found: forbidden.uniformity(),
        });
    }
    let space = n.checked_pow(k as u32).unwrap_or(usize::MAX);
    if space > options.ceiling {
        return Err(Error::CeilingExceeded {
            what: "n^k",
            size: space,
            ceiling: options.ceiling,
        });
    }
    let start = Instant::now();
    let (labels, candidates) = partite_base(k, n);
    let mut host = GrowingHost::new(k, k * n, Some(labels));
    let mut search = Search {
        candidates: &candidates,
        forbidden,
        best: Vec::new(),
        nodes: 0,
    };
    search.dfs(0, &mut host);
    let best = search.best;
    Ok(SolveResult {
        optimum: best.len() as u64,
        witness: SolveWitness::EdgeSet(best),
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    })
}

struct Search<'a> {
    candidates: &'a [Vec<Vertex>],
    forbidden: &'a Forbidden,
    best: Vec<Vec<Vertex>>,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, i: usize, host: &mut GrowingHost) {
        self.nodes += 1;
        if host.len() > self.best.len() {
            self.best = host.edges().to_vec();
        }
        if i == self.candidates.len() || host.len() + (self.candidates.len() - i) <= self.best.len()
        {
            return;
        }
        let edge = self.candidates[i].clone();
        host.push(edge.clone());
        if !self.forbidden.completed_by(host, &edge) {
            self.dfs(i + 1, host);
        }
        host.pop();
        self.dfs(i + 1, host);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::canonical_dk;
    use crate::patterns::positive_simplex_pattern;

    #[test]
    fn base_layout() {
        let (labels, cands) = partite_base(2, 2);
        assert_eq!(labels, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(cands, vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn small_values() {
        let opts = ZarankiewiczOptions::default();
        let d2 = Forbidden::Pattern(canonical_dk(2).unwrap().pattern);
        assert_eq!(zarankiewicz_max(2, 2, &d2, &opts).unwrap().optimum, 2);
        let s2 = Forbidden::Pattern(positive_simplex_pattern(2).unwrap());
        let r = zarankiewicz_max(2, 2, &s2, &opts).unwrap();
        assert_eq!(r.optimum, 3);
        let SolveWitness::EdgeSet(w) = &r.witness else {
            panic!()
        };
        // {11, 12, 22}
        assert_eq!(w, &vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
        assert!(!s2.occurs_in(&partite_host(2, 2, w).unwrap()).unwrap());
    }

    #[test]
    fn ceiling_and_mismatch() {
        let d2 = Forbidden::Pattern(canonical_dk(2).unwrap().pattern);
        assert!(matches!(
            zarankiewicz_max(2, 6, &d2, &ZarankiewiczOptions::default()),
            Err(Error::CeilingExceeded { .. })
        ));
        assert!(matches!(
            zarankiewicz_max(3, 2, &d2, &ZarankiewiczOptions::default()),
            Err(Error::UniformityMismatch { .. })
        ));
    }
}
