//! Brute-force oracles shared by the integration tests. Each one works from
//! the raw edge list and shares no code with the library solvers.

#![allow(dead_code)]

use hypercert::{Pattern, PatternRef, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn has_edge(edges: &[Vec<Vertex>], e: &[Vertex]) -> bool {
    let mut e = e.to_vec();
    e.sort_unstable();
    edges.contains(&e)
}

/// Tries every injective map from pattern vertices to host vertices.
pub fn naive_contains(n: usize, edges: &[Vec<Vertex>], p: &Pattern) -> bool {
    fn extend(n: usize, edges: &[Vec<Vertex>], p: &Pattern, map: &mut Vec<Vertex>) -> bool {
        if map.len() == p.num_vertices() {
            return p.graph().edges().all(|pe| {
                has_edge(
                    edges,
                    &pe.iter().map(|&v| map[v as usize]).collect::<Vec<_>>(),
                )
            });
        }
        for v in 0..n as Vertex {
            if !map.contains(&v) {
                map.push(v);
                if extend(n, edges, p, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(n, edges, p, &mut Vec::new())
}

/// Largest vertex set spanning no edge, by enumerating all subsets.
pub fn naive_alpha(n: usize, edges: &[Vec<Vertex>]) -> u64 {
    (0u32..1 << n)
        .filter(|mask| !edges.iter().any(|e| e.iter().all(|&v| mask >> v & 1 == 1)))
        .map(|mask| mask.count_ones() as u64)
        .max()
        .unwrap_or(0)
}

pub fn naive_sparse(n: usize, edges: &[Vec<Vertex>], c: u64, r: u32) -> bool {
    (0u32..1 << n).all(|mask| {
        let s = mask.count_ones() as u64;
        let spanned = edges
            .iter()
            .filter(|e| e.iter().all(|&v| mask >> v & 1 == 1))
            .count() as u64;
        spanned <= c * s.pow(r)
    })
}

/// `count` random 3-graphs with `4..=12` vertices and at most 15 edges.
pub fn seeded_3graphs(seed: u64, count: usize) -> Vec<(usize, Vec<[Vertex; 3]>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(4..=12usize);
            let m = rng.random_range(0..=15usize);
            let edges = (0..m)
                .map(|_| {
                    let mut e = [0; 3];
                    for (i, v) in rand::seq::index::sample(&mut rng, n, 3)
                        .into_iter()
                        .enumerate()
                    {
                        e[i] = v as Vertex;
                    }
                    e
                })
                .collect();
            (n, edges)
        })
        .collect()
}

/// 3-uniform patterns small enough for [`naive_contains`].
pub fn oracle_patterns() -> Vec<Pattern> {
    ["k4minus", "k4", "path:3", "path:4", "f5", "complete:4:3"]
        .iter()
        .map(|t| t.parse::<PatternRef>().unwrap().build().unwrap())
        .collect()
}
