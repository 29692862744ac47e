//! Exact maximum independent set by branch and bound.
//!
//! A vertex set is independent when it contains no edge. The search keeps
//! three disjoint bitsets (chosen, excluded, undecided). An edge is alive
//! while none of its vertices is excluded; an alive edge whose undecided
//! part has shrunk to one vertex forces that vertex out. The upper bound
//! subtracts one per member of a greedy family of alive edges with pairwise
//! disjoint undecided parts, since each such edge must lose a distinct
//! undecided vertex.

use std::time::Instant;

use super::{SolveResult, SolveWitness};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

/// Default vertex ceiling for exact solves.
pub const DEFAULT_EXACT_CEILING: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MisOptions {
    /// Refuse instances with more vertices than this.
    pub ceiling: usize,
}

impl Default for MisOptions {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_EXACT_CEILING,
        }
    }
}

pub fn is_independent(h: &Hypergraph, set: &[Vertex]) -> bool {
    let mut member = vec![false; h.num_vertices()];
    for &v in set {
        match member.get_mut(v as usize) {
            Some(m) => *m = true,
            None => return false,
        }
    }
    h.spanned_edges(&member) == 0
}

pub fn max_independent_set(h: &Hypergraph, options: &MisOptions) -> Result<SolveResult> {
    if h.num_vertices() > options.ceiling {
        return Err(Error::CeilingExceeded {
            what: "num_vertices",
            size: h.num_vertices(),
            ceiling: options.ceiling,
        });
    }
    let start = Instant::now();
    let mut solver = Solver::new(h);
    let full = solver.full_mask();
    let mut best = solver.greedy_start();
    solver.best_size = best.count();
    solver.search(
        Bits::zero(solver.words),
        Bits::zero(solver.words),
        full,
        &mut best,
    );
    let witness: Vec<Vertex> = best.iter().collect();
    Ok(SolveResult {
        optimum: witness.len() as u64,
        witness: SolveWitness::VertexSet(witness),
        nodes_explored: solver.nodes,
        elapsed: start.elapsed(),
    })
}

/// In the red/blue coloring of all `k`-sets where red means "edge of `h`",
/// a blue complete subhypergraph is exactly an independent set of `h`.
pub fn max_blue_clique_equals_alpha(h: &Hypergraph, options: &MisOptions) -> Result<SolveResult> {
    max_independent_set(h, options)
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zero(words: usize) -> Self {
        Bits(vec![0; words])
    }
    fn set(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    fn clear(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some((i * 64) as Vertex + b)
            })
        })
    }
}

struct Solver {
    n: usize,
    words: usize,
    uniformity: usize,
    /// Edge bitsets, `words` per edge.
    edge_bits: Vec<u64>,
    edges: Vec<Vec<Vertex>>,
    nodes: u64,
    best_size: usize,
}

impl Solver {
    fn new(h: &Hypergraph) -> Self {
        let n = h.num_vertices();
        let words = n.div_ceil(64).max(1);
        let mut edge_bits = vec![0u64; h.num_edges() * words];
        for (i, e) in h.edges().enumerate() {
            for &v in e {
                edge_bits[i * words + v as usize / 64] |= 1 << (v % 64);
            }
        }
        Solver {
            n,
            words,
            uniformity: h.uniformity(),
            edge_bits,
            edges: h.edges().map(|e| e.to_vec()).collect(),
            nodes: 0,
            best_size: 0,
        }
    }

    fn full_mask(&self) -> Bits {
        let mut b = Bits::zero(self.words);
        for v in 0..self.n {
            b.set(v);
        }
        b
    }

    fn edge(&self, i: usize) -> &[u64] {
        &self.edge_bits[i * self.words..(i + 1) * self.words]
    }

    fn alive(&self, i: usize, out: &Bits) -> bool {
        self.edge(i).iter().zip(&out.0).all(|(e, o)| e & o == 0)
    }

    fn undecided_count(&self, i: usize, und: &Bits) -> u32 {
        self.edge(i)
            .iter()
            .zip(&und.0)
            .map(|(e, u)| (e & u).count_ones())
            .sum()
    }

    /// Lowest-degree-first greedy independent set, used as the first incumbent.
    fn greedy_start(&self) -> Bits {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v as usize] += 1;
            }
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (deg[v], v));
        let mut chosen = vec![false; self.n];
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                incident[v as usize].push(i);
            }
        }
        for v in order {
            let closes = incident[v].iter().any(|&i| {
                self.edges[i]
                    .iter()
                    .all(|&u| u as usize == v || chosen[u as usize])
            });
            if !closes {
                chosen[v] = true;
            }
        }
        let mut b = Bits::zero(self.words);
        for v in (0..self.n).filter(|&v| chosen[v]) {
            b.set(v);
        }
        b
    }

    fn search(&mut self, mut inset: Bits, mut out: Bits, mut und: Bits, best: &mut Bits) {
        self.nodes += 1;
        // forced exclusions
        loop {
            let mut changed = false;
            for i in 0..self.edges.len() {
                if !self.alive(i, &out) {
                    continue;
                }
                match self.undecided_count(i, &und) {
                    0 => return,
                    1 => {
                        let v = self.edges[i]
                            .iter()
                            .copied()
                            .find(|&v| und.0[v as usize / 64] >> (v % 64) & 1 == 1)
                            .expect("one undecided vertex");
                        und.clear(v as usize);
                        out.set(v as usize);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }

        let chosen = inset.count();
        let open = und.count();
        if chosen + open <= self.best_size {
            return;
        }

        // disjoint undecided parts, smallest parts first
        let mut taken = Bits::zero(self.words);
        let mut packed = 0usize;
        let mut any_alive = false;
        for size in 2..=self.uniformity as u32 {
            for i in 0..self.edges.len() {
                if !self.alive(i, &out) || self.undecided_count(i, &und) != size {
                    continue;
                }
                any_alive = true;
                let disjoint = self
                    .edge(i)
                    .iter()
                    .zip(&und.0)
                    .zip(&taken.0)
                    .all(|((e, u), t)| e & u & t == 0);
                if disjoint {
                    for (w, (e, u)) in taken.0.iter_mut().zip(self.edge(i).iter().zip(&und.0)) {
                        *w |= e & u;
                    }
                    packed += 1;
                }
            }
        }
        if chosen + open - packed <= self.best_size {
            return;
        }
        if !any_alive {
            // everything undecided can join
            let mut all = inset.clone();
            for (w, u) in all.0.iter_mut().zip(&und.0) {
                *w |= u;
            }
            self.best_size = chosen + open;
            *best = all;
            return;
        }

        // branch on the undecided vertex in the most alive edges
        let mut score = vec![0u32; self.n];
        for i in 0..self.edges.len() {
            if self.alive(i, &out) {
                for &v in &self.edges[i] {
                    if und.0[v as usize / 64] >> (v % 64) & 1 == 1 {
                        score[v as usize] += 1;
                    }
                }
            }
        }
        let pivot = und
            .iter()
            .max_by_key(|&v| (score[v as usize], std::cmp::Reverse(v)))
            .expect("undecided vertex exists") as usize;

        und.clear(pivot);
        let mut with = inset.clone();
        with.set(pivot);
        self.search(with, out.clone(), und.clone(), best);
        out.set(pivot);
        inset.clear(pivot);
        self.search(inset, out, und, best);
    }
}
