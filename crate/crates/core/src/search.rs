//! Subhypergraph containment search.
//!
//! A copy of a pattern `P` in a host `H` is an injective map from the
//! vertices of `P` to those of `H` sending every edge of `P` onto an edge of
//! `H` (not necessarily induced). The search places pattern edges one at a
//! time, most-connected first, drawing candidate host edges from the
//! incidence list of the already-mapped vertex with the smallest host degree.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::patterns::{PartOrder, Pattern};

const UNMAPPED: Vertex = Vertex::MAX;

/// Read access to a host hypergraph for the matcher.
pub trait Host {
    fn uniformity(&self) -> usize;
    fn num_vertices(&self) -> usize;
    fn num_edges(&self) -> usize;
    fn edge(&self, i: usize) -> &[Vertex];
    /// Indices of the edges containing `v`.
    fn incident(&self, v: Vertex) -> &[u32];
    /// `edge` is sorted.
    fn has_edge(&self, edge: &[Vertex]) -> bool;
    fn label(&self, v: Vertex) -> Option<&[u32]>;
}

/// A [`Hypergraph`] with its incidence lists precomputed.
pub struct IndexedHost<'a> {
    graph: &'a Hypergraph,
    incidence: Vec<Vec<u32>>,
}

impl<'a> IndexedHost<'a> {
    pub fn new(graph: &'a Hypergraph) -> Self {
        Self {
            graph,
            incidence: graph.incidence(),
        }
    }
}

impl Host for IndexedHost<'_> {
    fn uniformity(&self) -> usize {
        self.graph.uniformity()
    }
    fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }
    fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }
    fn edge(&self, i: usize) -> &[Vertex] {
        self.graph.edge(i)
    }
    fn incident(&self, v: Vertex) -> &[u32] {
        &self.incidence[v as usize]
    }
    fn has_edge(&self, edge: &[Vertex]) -> bool {
        self.graph.contains_edge(edge)
    }
    fn label(&self, v: Vertex) -> Option<&[u32]> {
        self.graph.label(v)
    }
}

/// A host that grows and shrinks one edge at a time (last in, first out).
/// Used by the Zarankiewicz search to test each new edge incrementally.
pub struct GrowingHost {
    uniformity: usize,
    edges: Vec<Vec<Vertex>>,
    incidence: Vec<Vec<u32>>,
    present: HashSet<Vec<Vertex>>,
    labels: Option<Vec<Vec<u32>>>,
}

impl GrowingHost {
    pub fn new(uniformity: usize, num_vertices: usize, labels: Option<Vec<Vec<u32>>>) -> Self {
        Self {
            uniformity,
            edges: Vec::new(),
            incidence: vec![Vec::new(); num_vertices],
            present: HashSet::new(),
            labels,
        }
    }

    /// `edge` must be sorted, new, and of the right size.
    pub fn push(&mut self, edge: Vec<Vertex>) {
        debug_assert_eq!(edge.len(), self.uniformity);
        let idx = self.edges.len() as u32;
        for &v in &edge {
            self.incidence[v as usize].push(idx);
        }
        self.present.insert(edge.clone());
        self.edges.push(edge);
    }

    pub fn pop(&mut self) -> Option<Vec<Vertex>> {
        let edge = self.edges.pop()?;
        for &v in &edge {
            self.incidence[v as usize].pop();
        }
        self.present.remove(&edge);
        Some(edge)
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl Host for GrowingHost {
    fn uniformity(&self) -> usize {
        self.uniformity
    }
    fn num_vertices(&self) -> usize {
        self.incidence.len()
    }
    fn num_edges(&self) -> usize {
        self.edges.len()
    }
    fn edge(&self, i: usize) -> &[Vertex] {
        &self.edges[i]
    }
    fn incident(&self, v: Vertex) -> &[u32] {
        &self.incidence[v as usize]
    }
    fn has_edge(&self, edge: &[Vertex]) -> bool {
        self.present.contains(edge)
    }
    fn label(&self, v: Vertex) -> Option<&[u32]> {
        self.labels.as_ref().map(|l| l[v as usize].as_slice())
    }
}

/// An embedding of a pattern into a host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `vertex_map[p]` is the host vertex assigned to pattern vertex `p`.
    pub vertex_map: Vec<Vertex>,
    /// Image of each pattern edge, in pattern edge order.
    pub matched_edges: Vec<Vec<Vertex>>,
}

impl Witness {
    /// Independent re-check: injective, every pattern edge lands exactly on
    /// a host edge, and part/order constraints hold.
    pub fn validate(&self, host: &Hypergraph, pattern: &Pattern) -> bool {
        let map = &self.vertex_map;
        if map.len() != pattern.num_vertices()
            || map.iter().any(|&v| v as usize >= host.num_vertices())
        {
            return false;
        }
        let distinct: HashSet<_> = map.iter().collect();
        if distinct.len() != map.len() {
            return false;
        }
        let images: Vec<Vec<Vertex>> = pattern
            .graph()
            .edges()
            .map(|e| {
                let mut img: Vec<Vertex> = e.iter().map(|&p| map[p as usize]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        if images != self.matched_edges || !images.iter().all(|e| host.contains_edge(e)) {
            return false;
        }
        match pattern.constraints() {
            None => true,
            Some(c) => (0..map.len()).all(|p| {
                (0..map.len()).all(|q| pair_ok(c, p, q, host.label(map[p]), host.label(map[q])))
            }),
        }
    }
}

fn pair_ok(c: &PartOrder, p: usize, q: usize, lp: Option<&[u32]>, lq: Option<&[u32]>) -> bool {
    let (Some(lp), Some(lq)) = (lp, lq) else {
        return false;
    };
    if lp.len() < 2 || lq.len() < 2 {
        return false;
    }
    if (c.parts[p] == c.parts[q]) != (lp[0] == lq[0]) {
        return false;
    }
    c.increasing.iter().all(|&(lo, hi)| {
        if (lo as usize, hi as usize) == (p, q) {
            lp[0] == lq[0] && lp[1] < lq[1]
        } else if (lo as usize, hi as usize) == (q, p) {
            lp[0] == lq[0] && lq[1] < lp[1]
        } else {
            true
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    NoCopy,
    Found(Witness),
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_no_copy(&self) -> bool {
        matches!(self, SearchOutcome::NoCopy)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// Searches `host` for a copy of `pattern`. `budget` caps node expansions;
/// without one the search is exhaustive.
pub fn contains_pattern(
    host: &Hypergraph,
    pattern: &Pattern,
    budget: Option<u64>,
) -> Result<SearchOutcome> {
    let indexed = IndexedHost::new(host);
    Ok(PatternSearch::new(&indexed, pattern)?.budget(budget).run())
}

/// Configurable search over any [`Host`].
pub struct PatternSearch<'a, H: Host> {
    host: &'a H,
    pattern: &'a Pattern,
    budget: Option<u64>,
    anchor: Option<Vec<Vertex>>,
    nodes: u64,
}

impl<'a, H: Host> PatternSearch<'a, H> {
    pub fn new(host: &'a H, pattern: &'a Pattern) -> Result<Self> {
        if host.uniformity() != pattern.uniformity() {
            return Err(Error::UniformityMismatch {
                expected: pattern.uniformity(),
                found: host.uniformity(),
            });
        }
        if pattern.constraints().is_some() {
            let labeled = (0..host.num_vertices() as Vertex)
                .all(|v| host.label(v).is_some_and(|l| l.len() >= 2));
            if !labeled {
                return Err(Error::ConstraintsNeedLabels);
            }
        }
        Ok(Self {
            host,
            pattern,
            budget: None,
            anchor: None,
            nodes: 0,
        })
    }

    pub fn budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    /// Only report copies that use this host edge (sorted).
    pub fn through(mut self, edge: Vec<Vertex>) -> Self {
        self.anchor = Some(edge);
        self
    }

    pub fn nodes_explored(&self) -> u64 {
        self.nodes
    }

    pub fn run(&mut self) -> SearchOutcome {
        let pat = self.pattern.graph();
        if pat.num_vertices() > self.host.num_vertices() {
            return SearchOutcome::NoCopy;
        }
        let pat_deg = pat.degrees();
        let mut state = State {
            map: vec![UNMAPPED; pat.num_vertices()],
            used: vec![false; self.host.num_vertices()],
            nodes: 0,
            budget: self.budget,
            exhausted: false,
        };
        let roots: Vec<usize> = match &self.anchor {
            Some(_) => (0..pat.num_edges()).collect(),
            None if pat.num_edges() == 0 => vec![],
            None => vec![first_edge(pat, &pat_deg)],
        };
        let mut found = None;
        if roots.is_empty() {
            let ctx = Ctx {
                host: self.host,
                pattern: self.pattern,
                pat_deg: &pat_deg,
                order: vec![],
                anchor: None,
            };
            found = ctx.step(0, &mut state);
        }
        for root in roots {
            let ctx = Ctx {
                host: self.host,
                pattern: self.pattern,
                pat_deg: &pat_deg,
                order: edge_order(pat, &pat_deg, root),
                anchor: self.anchor.as_deref(),
            };
            found = ctx.step(0, &mut state);
            if found.is_some() || state.exhausted {
                break;
            }
        }
        self.nodes = state.nodes;
        match found {
            Some(map) => {
                let matched_edges = pat
                    .edges()
                    .map(|e| {
                        let mut img: Vec<Vertex> = e.iter().map(|&p| map[p as usize]).collect();
                        img.sort_unstable();
                        img
                    })
                    .collect();
                SearchOutcome::Found(Witness {
                    vertex_map: map,
                    matched_edges,
                })
            }
            None if state.exhausted => SearchOutcome::BudgetExhausted,
            None => SearchOutcome::NoCopy,
        }
    }
}

fn first_edge(pat: &Hypergraph, deg: &[usize]) -> usize {
    let weight = |i: usize| pat.edge(i).iter().map(|&v| deg[v as usize]).sum::<usize>();
    // max weight, lowest index on ties
    (0..pat.num_edges())
        .rev()
        .max_by_key(|&i| weight(i))
        .unwrap_or(0)
}

/// Greedy order: after `root`, repeatedly take the edge with the most
/// already-covered vertices, then the largest degree sum, then lowest index.
fn edge_order(pat: &Hypergraph, deg: &[usize], root: usize) -> Vec<usize> {
    let m = pat.num_edges();
    let mut covered = vec![false; pat.num_vertices()];
    let mut placed = vec![false; m];
    let mut order = Vec::with_capacity(m);
    let mut next = root;
    loop {
        placed[next] = true;
        order.push(next);
        for &v in pat.edge(next) {
            covered[v as usize] = true;
        }
        let cand = (0..m).filter(|&i| !placed[i]).rev().max_by_key(|&i| {
            let e = pat.edge(i);
            let c = e.iter().filter(|&&v| covered[v as usize]).count();
            let w: usize = e.iter().map(|&v| deg[v as usize]).sum();
            (c, w)
        });
        match cand {
            Some(i) => next = i,
            None => break,
        }
    }
    order
}

struct State {
    map: Vec<Vertex>,
    used: Vec<bool>,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl State {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

struct Ctx<'a, H: Host> {
    host: &'a H,
    pattern: &'a Pattern,
    pat_deg: &'a [usize],
    order: Vec<usize>,
    anchor: Option<&'a [Vertex]>,
}

impl<H: Host> Ctx<'_, H> {
    fn step(&self, i: usize, st: &mut State) -> Option<Vec<Vertex>> {
        if !st.tick() {
            return None;
        }
        if i == self.order.len() {
            return self.place_isolated(st);
        }
        let pe = self.pattern.graph().edge(self.order[i]);
        let mapped: Vec<Vertex> = pe
            .iter()
            .copied()
            .filter(|&p| st.map[p as usize] != UNMAPPED)
            .collect();
        let unmapped: Vec<Vertex> = pe
            .iter()
            .copied()
            .filter(|&p| st.map[p as usize] == UNMAPPED)
            .collect();

        if unmapped.is_empty() {
            let mut img: Vec<Vertex> = pe.iter().map(|&p| st.map[p as usize]).collect();
            img.sort_unstable();
            if self.host.has_edge(&img) {
                return self.step(i + 1, st);
            }
            return None;
        }

        let images: Vec<Vertex> = mapped.iter().map(|&p| st.map[p as usize]).collect();
        let mut free: Vec<Vertex> = Vec::with_capacity(unmapped.len());
        let mut try_edge = |he: &[Vertex], st: &mut State| -> Option<Vec<Vertex>> {
            if !images.iter().all(|v| he.contains(v)) {
                return None;
            }
            free.clear();
            free.extend(
                he.iter()
                    .copied()
                    .filter(|v| !images.contains(v) && !st.used[*v as usize]),
            );
            if free.len() != unmapped.len() {
                return None;
            }
            let free = free.clone();
            self.assign(i, &unmapped, 0, &free, st)
        };

        if i == 0 {
            if let Some(anchor) = self.anchor {
                return try_edge(anchor, st);
            }
        }
        if let Some(pivot) = images
            .iter()
            .copied()
            .min_by_key(|&v| self.host.incident(v).len())
        {
            for &ei in self.host.incident(pivot) {
                if let Some(found) = try_edge(self.host.edge(ei as usize), st) {
                    return Some(found);
                }
                if st.exhausted {
                    return None;
                }
            }
        } else {
            for ei in 0..self.host.num_edges() {
                if let Some(found) = try_edge(self.host.edge(ei), st) {
                    return Some(found);
                }
                if st.exhausted {
                    return None;
                }
            }
        }
        None
    }

    /// Assigns `unmapped[j..]` to distinct members of `free`, every ordering.
    fn assign(
        &self,
        i: usize,
        unmapped: &[Vertex],
        j: usize,
        free: &[Vertex],
        st: &mut State,
    ) -> Option<Vec<Vertex>> {
        if j == unmapped.len() {
            return self.step(i + 1, st);
        }
        let p = unmapped[j];
        for &h in free {
            if st.used[h as usize] || !self.compatible(p, h, st) {
                continue;
            }
            st.map[p as usize] = h;
            st.used[h as usize] = true;
            let r = self.assign(i, unmapped, j + 1, free, st);
            st.map[p as usize] = UNMAPPED;
            st.used[h as usize] = false;
            if r.is_some() || st.exhausted {
                return r;
            }
        }
        None
    }

    fn compatible(&self, p: Vertex, h: Vertex, st: &State) -> bool {
        if self.host.incident(h).len() < self.pat_deg[p as usize] {
            return false;
        }
        let Some(c) = self.pattern.constraints() else {
            return true;
        };
        let lh = self.host.label(h);
        st.map
            .iter()
            .enumerate()
            .all(|(q, &hq)| hq == UNMAPPED || pair_ok(c, p as usize, q, lh, self.host.label(hq)))
    }

    fn place_isolated(&self, st: &mut State) -> Option<Vec<Vertex>> {
        let mut map = st.map.clone();
        let mut used = st.used.clone();
        let mut next = 0usize;
        for slot in map.iter_mut().filter(|m| **m == UNMAPPED) {
            while next < used.len() && used[next] {
                next += 1;
            }
            if next == used.len() {
                return None;
            }
            *slot = next as Vertex;
            used[next] = true;
        }
        Some(map)
    }
}
