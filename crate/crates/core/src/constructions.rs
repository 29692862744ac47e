//! Deterministic builders for the hypergraph families, plus independent
//! per-edge membership predicates used to audit them.
//!
//! Grid families (`h2`, `hk`, `jk`, `hf`) number their vertices with
//! [`GridIndexer`] and carry the 1-based coordinate tuples as labels.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridIndexer;
use crate::hypergraph::{Hypergraph, Vertex};
use crate::patterns::{some_set_covered, tuple_as_set, Pattern};
use crate::search::contains_pattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    H2,
    Hk,
    Jk,
    SudakovG,
    Hf,
    DisjointUnion,
}

impl Family {
    pub fn id(&self) -> &'static str {
        match self {
            Family::H2 => "h2",
            Family::Hk => "hk",
            Family::Jk => "jk",
            Family::SudakovG => "sudakov_g",
            Family::Hf => "hf",
            Family::DisjointUnion => "disjoint_union",
        }
    }
}

/// What to build. `k` is ignored by `h2` and `hf`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    #[serde(default = "one")]
    pub copies: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner: Option<Box<ConstructionSpec>>,
}

fn one() -> usize {
    1
}

impl ConstructionSpec {
    pub fn new(family: Family, k: usize, n: usize) -> Self {
        let k = match family {
            Family::H2 => 2,
            Family::Hf => 3,
            _ => k,
        };
        Self {
            family,
            k,
            n,
            copies: 1,
            inner: None,
        }
    }

    pub fn union_of(inner: ConstructionSpec, copies: usize) -> Self {
        Self {
            family: Family::DisjointUnion,
            k: inner.k,
            n: inner.n,
            copies,
            inner: Some(Box::new(inner)),
        }
    }

    pub fn build(&self) -> Result<Hypergraph> {
        if self.copies == 0 {
            return Err(Error::InvalidParameter("copies must be >= 1".into()));
        }
        match self.family {
            Family::H2 => build_h2(self.n),
            Family::Hk => build_hk(self.k, self.n),
            Family::Jk => build_jk(self.k, self.n),
            Family::SudakovG => build_sudakov_g(self.k, self.n),
            Family::Hf => build_hf(self.n),
            Family::DisjointUnion => {
                let inner = self.inner.as_ref().ok_or_else(|| {
                    Error::InvalidParameter("disjoint_union needs an inner spec".into())
                })?;
                disjoint_union(&inner.build()?, self.copies)
            }
        }
    }
}

fn check_kn(k: usize, n: usize) -> Result<()> {
    if k < 2 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 2 and n >= 2 (got k={k}, n={n})"
        )));
    }
    Ok(())
}

fn increasing_pairs(n: usize) -> Vec<(u32, u32)> {
    (1..=n as u32).tuple_combinations().collect()
}

/// Grid hypergraph from edges given as coordinate tuples.
fn grid_hypergraph(
    grid: &GridIndexer,
    uniformity: usize,
    edges: Vec<Vec<Vertex>>,
) -> Result<Hypergraph> {
    Hypergraph::new(uniformity, grid.len(), edges)?.with_labels(grid.labels())
}

/// 3-uniform: vertices `(a, b)` in `[n]^2`, one edge `{ab, ac, db}` for each
/// `a < d`, `b < c`.
pub fn build_h2(n: usize) -> Result<Hypergraph> {
    check_kn(2, n)?;
    let grid = GridIndexer::new(2, n)?;
    let pairs = increasing_pairs(n);
    let mut edges = Vec::with_capacity(pairs.len() * pairs.len());
    for &(a, d) in &pairs {
        for &(b, c) in &pairs {
            edges.push(vec![
                grid.encode(&[a, b])?,
                grid.encode(&[a, c])?,
                grid.encode(&[d, b])?,
            ]);
        }
    }
    grid_hypergraph(&grid, 3, edges)
}

/// (k+1)-uniform on `[n]^k`: for every base tuple `v` and `v'` with
/// `v'_i > v_i` for all i, the edge `{v, e_1, .., e_k}` where `e_i` is `v`
/// with coordinate i raised to `v'_i`.
pub fn build_hk(k: usize, n: usize) -> Result<Hypergraph> {
    check_kn(k, n)?;
    let grid = GridIndexer::new(k, n)?;
    let pairs = increasing_pairs(n);
    let mut edges = Vec::new();
    for choice in (0..k).map(|_| pairs.iter()).multi_cartesian_product() {
        let base: Vec<u32> = choice.iter().map(|p| p.0).collect();
        let mut edge = vec![grid.encode(&base)?];
        for (i, p) in choice.iter().enumerate() {
            let mut e = base.clone();
            e[i] = p.1;
            edge.push(grid.encode(&e)?);
        }
        edges.push(edge);
    }
    grid_hypergraph(&grid, k + 1, edges)
}

/// A member of the special-cluster family together with its designated
/// pair of disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterPattern {
    pub pattern: Pattern,
    pub disjoint_pair: (Vec<Vertex>, Vec<Vertex>),
    /// Which edge of the previous pair received `y` at each step, `false`
    /// for the first (canonical) one.
    pub choices: Vec<bool>,
}

fn cluster_from_choices(k: usize, choices: &[bool]) -> Result<ClusterPattern> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "special cluster needs k >= 2 (got {k})"
        )));
    }
    // path 0-1-2-3 with end edges as the disjoint pair
    let mut edges: Vec<Vec<Vertex>> = vec![vec![0, 1], vec![1, 2], vec![2, 3]];
    let (mut a, mut b) = (vec![0, 1], vec![2, 3]);
    for (step, &enlarge_second) in choices.iter().enumerate() {
        let level = step as Vertex + 3;
        let (x, y) = (2 * level - 2, 2 * level - 1);
        for e in edges.iter_mut() {
            e.push(x);
        }
        let (target, other) = if enlarge_second { (&b, &a) } else { (&a, &b) };
        let mut grown = target.clone();
        grown.push(y);
        let mut rest = other.clone();
        rest.push(x);
        edges.push(grown.clone());
        a = grown;
        b = rest;
    }
    let graph = Hypergraph::new(k, 2 * k, &edges)?;
    a.sort_unstable();
    b.sort_unstable();
    Ok(ClusterPattern {
        pattern: Pattern::new(format!("D_{k}"), graph),
        disjoint_pair: (a, b),
        choices: choices.to_vec(),
    })
}

/// The canonical member of the special k-cluster family: start from the
/// 3-edge path, and at each step enlarge every edge by a new vertex `x` and
/// the first designated edge by a new vertex `y`. Vertices are numbered
/// from 0, so step k adds `x = 2k-2`, `y = 2k-1`.
pub fn canonical_dk(k: usize) -> Result<ClusterPattern> {
    cluster_from_choices(k, &vec![false; k.saturating_sub(2)])
}

/// Every member of the family, one representative per isomorphism class,
/// canonical member first.
pub fn dk_family(k: usize) -> Result<Vec<ClusterPattern>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "special cluster needs k >= 2 (got {k})"
        )));
    }
    let mut reps: Vec<ClusterPattern> = Vec::new();
    for choices in (0..k - 2).map(|_| [false, true]).multi_cartesian_product() {
        let member = cluster_from_choices(k, &choices)?;
        let seen = reps.iter().any(|r| {
            contains_pattern(r.pattern.graph(), &member.pattern, None)
                .map(|o| o.is_found())
                .unwrap_or(false)
        });
        if !seen {
            reps.push(member);
        }
    }
    if reps.is_empty() {
        reps.push(canonical_dk(k)?);
    }
    Ok(reps)
}

/// Views `k + 1` coordinate tuples as a k-uniform hypergraph on the disjoint
/// union of the parts, renumbering the used base vertices densely.
pub fn tuples_as_hypergraph(tuples: &[&[u32]]) -> Result<Hypergraph> {
    let sets: Vec<Vec<u32>> = tuples.iter().map(|t| tuple_as_set(t)).collect();
    let base: Vec<u32> = sets
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let edges = sets.iter().map(|s| {
        s.iter()
            .map(|x| base.binary_search(x).expect("present") as Vertex)
            .collect::<Vec<_>>()
    });
    let k = tuples.first().map_or(1, |t| t.len());
    Hypergraph::new(k, base.len(), edges)
}

/// True iff the tuples, as a k-uniform hypergraph, are a copy of `member`.
pub fn is_cluster_copy(tuples: &[&[u32]], member: &ClusterPattern) -> bool {
    let p = &member.pattern;
    match tuples_as_hypergraph(tuples) {
        Ok(h) if h.num_vertices() == p.num_vertices() && h.num_edges() == p.num_edges() => {
            contains_pattern(&h, p, None)
                .map(|o| o.is_found())
                .unwrap_or(false)
        }
        _ => false,
    }
}

/// (k+1)-uniform on `[n]^k` whose edges are the (k+1)-sets of tuples forming
/// a copy of the canonical special k-cluster.
pub fn build_jk(k: usize, n: usize) -> Result<Hypergraph> {
    build_jk_with(&canonical_dk(k)?, n)
}

/// As [`build_jk`] for an arbitrary family member.
///
/// A copy spans 2k base vertices and contains two disjoint transversals, so
/// it uses exactly two values in every coordinate. Copies are therefore
/// enumerated inside each box `{p_1,q_1} x .. x {p_k,q_k}`, all boxes
/// sharing the same shape list computed once on `{0,1}^k`.
pub fn build_jk_with(member: &ClusterPattern, n: usize) -> Result<Hypergraph> {
    let k = member.pattern.uniformity();
    check_kn(k, n)?;
    let grid = GridIndexer::new(k, n)?;
    let cube: Vec<Vec<u32>> = (0..1u32 << k)
        .map(|bits| (0..k).map(|i| (bits >> (k - 1 - i)) & 1).collect())
        .collect();
    let shapes: Vec<Vec<usize>> = (0..cube.len())
        .combinations(k + 1)
        .filter(|idx| {
            let tuples: Vec<&[u32]> = idx.iter().map(|&i| cube[i].as_slice()).collect();
            is_cluster_copy(&tuples, member)
        })
        .collect();
    let pairs = increasing_pairs(n);
    let mut edges = Vec::new();
    for boxed in (0..k).map(|_| pairs.iter()).multi_cartesian_product() {
        for shape in &shapes {
            let mut edge = Vec::with_capacity(k + 1);
            for &ci in shape {
                let coords: Vec<u32> = cube[ci]
                    .iter()
                    .zip(&boxed)
                    .map(|(&bit, p)| if bit == 0 { p.0 } else { p.1 })
                    .collect();
                edge.push(grid.encode(&coords)?);
            }
            edges.push(edge);
        }
    }
    grid_hypergraph(&grid, k + 1, edges)
}

/// (k+1)-uniform on `[n]^2`: one edge
/// `{(x_1,y_1), (x_1,y_2), (x_2,y_2), .., (x_k,y_2)}` per `y_2 < y_1` and
/// `x_1 < .. < x_k`. Empty when `k > n`.
pub fn build_sudakov_g(k: usize, n: usize) -> Result<Hypergraph> {
    check_kn(k, n)?;
    let grid = GridIndexer::new(2, n)?;
    let mut edges = Vec::new();
    for (y2, y1) in increasing_pairs(n) {
        for xs in (1..=n as u32).combinations(k) {
            let mut edge = vec![grid.encode(&[xs[0], y1])?];
            for &x in &xs {
                edge.push(grid.encode(&[x, y2])?);
            }
            edges.push(edge);
        }
    }
    grid_hypergraph(&grid, k + 1, edges)
}

/// 4-uniform on `[n]^3`: a 4-set of triples is an edge iff one triple, as
/// a 3-set of base vertices, lies in the union of the other three.
///
/// Up to `n = 3` every 4-set is tested. Beyond that, each 3-set of triples
/// `{u, v, w}` generates the at most 27 triples it covers, which keeps the
/// work proportional to `C(n^3, 3)`.
pub fn build_hf(n: usize) -> Result<Hypergraph> {
    check_kn(2, n)?;
    let grid = GridIndexer::new(3, n)?;
    let labels = grid.labels();
    let sets: Vec<Vec<u32>> = labels.iter().map(|t| tuple_as_set(t)).collect();
    let total = grid.len() as Vertex;
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    if n <= 3 {
        for quad in (0..total).combinations(4) {
            let four: Vec<Vec<u32>> = quad.iter().map(|&v| sets[v as usize].clone()).collect();
            if some_set_covered(&four) {
                edges.push(quad);
            }
        }
    } else {
        for trio in (0..total).combinations(3) {
            let per_coord: Vec<Vec<u32>> = (0..3)
                .map(|i| {
                    trio.iter()
                        .map(|&v| labels[v as usize][i])
                        .sorted()
                        .dedup()
                        .collect()
                })
                .collect();
            for t in per_coord.iter().multi_cartesian_product() {
                let coords: Vec<u32> = t.into_iter().copied().collect();
                let id = grid.encode(&coords)?;
                if !trio.contains(&id) {
                    let mut e = trio.clone();
                    e.push(id);
                    e.sort_unstable();
                    edges.push(e);
                }
            }
        }
    }
    Hypergraph::new(4, grid.len(), edges)?.with_labels(labels)
}

/// `f` vertex-disjoint copies; copy `i` occupies ids `[iN, (i+1)N)`.
/// Labels, when present, are prefixed with the 1-based copy number.
pub fn disjoint_union(h: &Hypergraph, f: usize) -> Result<Hypergraph> {
    if f == 0 {
        return Err(Error::InvalidParameter("need at least one copy".into()));
    }
    let n = h.num_vertices();
    let edges = (0..f).flat_map(|i| {
        h.edges()
            .map(move |e| e.iter().map(|&v| v + (i * n) as Vertex).collect::<Vec<_>>())
    });
    let out = Hypergraph::new(h.uniformity(), n * f, edges.collect::<Vec<_>>())?;
    match h.labels() {
        Some(labels) if f > 1 => out.with_labels(
            (0..f)
                .flat_map(|i| {
                    labels.iter().map(move |l| {
                        std::iter::once(i as u32 + 1)
                            .chain(l.iter().copied())
                            .collect()
                    })
                })
                .collect(),
        ),
        Some(labels) => out.with_labels(labels.to_vec()),
        None => Ok(out),
    }
}

// Independent membership predicates over coordinate labels.

/// `{ab, ac, db}` with `c > b`, `d > a`, in any order.
pub fn is_h2_edge(tuples: &[&[u32]]) -> bool {
    tuples.len() == 3 && tuples.iter().all(|t| t.len() == 2) && is_hk_edge(tuples)
}

/// One tuple is the base; each other tuple raises exactly one coordinate of
/// the base, and every coordinate is raised exactly once.
pub fn is_hk_edge(tuples: &[&[u32]]) -> bool {
    let k = match tuples.first() {
        Some(t) => t.len(),
        None => return false,
    };
    if tuples.len() != k + 1 || tuples.iter().any(|t| t.len() != k) {
        return false;
    }
    tuples.iter().any(|base| {
        let mut raised = vec![0usize; k];
        for t in tuples.iter().filter(|t| *t != base) {
            let diffs: Vec<usize> = (0..k).filter(|&i| t[i] != base[i]).collect();
            match diffs[..] {
                [i] if t[i] > base[i] => raised[i] += 1,
                _ => return false,
            }
        }
        raised.iter().all(|&r| r == 1)
    })
}

/// An L: one lone point `(x_1, y_1)` above a row `y_2 < y_1` holding
/// `x_1 < .. < x_k`, where the lone point shares the first column.
pub fn is_sudakov_edge(tuples: &[&[u32]], k: usize) -> bool {
    if tuples.len() != k + 1 || tuples.iter().any(|t| t.len() != 2) {
        return false;
    }
    let rows: BTreeSet<u32> = tuples.iter().map(|t| t[1]).collect();
    if rows.len() != 2 {
        return false;
    }
    let (y2, y1) = (*rows.first().unwrap(), *rows.last().unwrap());
    let bottom: BTreeSet<u32> = tuples.iter().filter(|t| t[1] == y2).map(|t| t[0]).collect();
    let top: Vec<u32> = tuples.iter().filter(|t| t[1] == y1).map(|t| t[0]).collect();
    bottom.len() == k && top.len() == 1 && bottom.first() == Some(&top[0])
}

/// Some triple lies in the union of the other three.
pub fn is_hf_edge(tuples: &[&[u32]]) -> bool {
    tuples.len() == 4
        && tuples.iter().all(|t| t.len() == 3)
        && some_set_covered(&tuples.iter().map(|t| tuple_as_set(t)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, r: u64) -> u64 {
        if r > n {
            return 0;
        }
        (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn edge_labels<'a>(h: &'a Hypergraph, e: &[Vertex]) -> Vec<&'a [u32]> {
        e.iter().map(|&v| h.label(v).unwrap()).collect()
    }

    #[test]
    fn h2_small() {
        let h = build_h2(2).unwrap();
        assert_eq!(h.num_vertices(), 4);
        assert_eq!(h.num_edges(), 1);
        assert_eq!(
            edge_labels(&h, h.edge(0)),
            vec![&[1, 1][..], &[1, 2], &[2, 1]]
        );
        assert_eq!(build_h2(3).unwrap().num_edges(), 9);
        assert!(build_h2(1).is_err());
    }

    #[test]
    fn h2_matches_brute_force() {
        // every triple of grid points tested against the defining rule
        for n in 2..=4u32 {
            let h = build_h2(n as usize).unwrap();
            let grid = GridIndexer::new(2, n as usize).unwrap();
            let mut want = Vec::new();
            for (a, b, c, d) in (1..=n).flat_map(|a| {
                (1..=n).flat_map(move |b| {
                    (1..=n).flat_map(move |c| (1..=n).map(move |d| (a, b, c, d)))
                })
            }) {
                if c > b && d > a {
                    let mut e = vec![
                        grid.encode(&[a, b]).unwrap(),
                        grid.encode(&[a, c]).unwrap(),
                        grid.encode(&[d, b]).unwrap(),
                    ];
                    e.sort_unstable();
                    want.push(e);
                }
            }
            want.sort();
            assert_eq!(h.edges().map(|e| e.to_vec()).collect::<Vec<_>>(), want);
        }
    }

    #[test]
    fn hk_counts_and_agreement() {
        for k in 2..=4 {
            for n in 2..=5usize {
                if n.pow(k as u32) > 700 {
                    continue;
                }
                let h = build_hk(k, n).unwrap();
                assert_eq!(h.num_edges() as u64, binom(n as u64, 2).pow(k as u32));
            }
        }
        for n in 2..=6 {
            assert_eq!(build_hk(2, n).unwrap(), build_h2(n).unwrap());
        }
        let h = build_hk(3, 2).unwrap();
        assert_eq!(h.num_edges(), 1);
        let mut got = edge_labels(&h, h.edge(0));
        got.sort();
        assert_eq!(
            got,
            vec![&[1, 1, 1][..], &[1, 1, 2], &[1, 2, 1], &[2, 1, 1]]
        );
    }

    #[test]
    fn hk_central_tuple_unique() {
        let h = build_hk(3, 3).unwrap();
        assert!(h.max_degree() <= 4 * 27);
        for e in h.edges() {
            let t = edge_labels(&h, e);
            let below_all = t
                .iter()
                .filter(|a| {
                    t.iter()
                        .all(|b| a.iter().zip(b.iter()).all(|(x, y)| x <= y))
                })
                .count();
            assert_eq!(below_all, 1);
            assert!(is_hk_edge(&t));
        }
    }

    #[test]
    fn canonical_clusters() {
        let d2 = canonical_dk(2).unwrap();
        assert_eq!(
            d2.pattern.graph(),
            &Hypergraph::new(2, 4, [[0, 1], [1, 2], [2, 3]]).unwrap()
        );
        assert_eq!(d2.disjoint_pair, (vec![0, 1], vec![2, 3]));

        let d3 = canonical_dk(3).unwrap();
        let want = Hypergraph::new(3, 6, [[0, 1, 4], [1, 2, 4], [2, 3, 4], [0, 1, 5]]).unwrap();
        assert_eq!(d3.pattern.graph(), &want);
        assert_eq!(d3.disjoint_pair, (vec![0, 1, 5], vec![2, 3, 4]));

        for k in 2..=5 {
            let d = canonical_dk(k).unwrap();
            assert_eq!(d.pattern.num_vertices(), 2 * k);
            assert_eq!(d.pattern.num_edges(), k + 1);
            let (a, b) = &d.disjoint_pair;
            assert!(a.iter().all(|v| !b.contains(v)));
            assert!(d.pattern.graph().contains_edge(a) && d.pattern.graph().contains_edge(b));
        }
        assert!(canonical_dk(1).is_err());
    }

    #[test]
    fn cluster_family_sizes() {
        assert_eq!(dk_family(2).unwrap().len(), 1);
        assert_eq!(dk_family(3).unwrap().len(), 1);
        let f4 = dk_family(4).unwrap();
        assert!(!f4.is_empty() && f4.len() <= 2);
        assert_eq!(f4[0], canonical_dk(4).unwrap());
    }

    #[test]
    fn jk_small() {
        let j = build_jk(2, 2).unwrap();
        assert_eq!(j.num_edges(), 4);
        assert_eq!(j.num_vertices(), 4);
    }

    #[test]
    fn jk_exhaustive_agreement() {
        // no (k+1)-set of tuples outside the edge list is a copy
        for (k, n) in [(2usize, 2usize), (2, 3), (3, 2)] {
            let j = build_jk(k, n).unwrap();
            let d = canonical_dk(k).unwrap();
            let labels = j.labels().unwrap();
            for set in (0..j.num_vertices() as Vertex).combinations(k + 1) {
                let tuples: Vec<&[u32]> =
                    set.iter().map(|&v| labels[v as usize].as_slice()).collect();
                assert_eq!(
                    is_cluster_copy(&tuples, &d),
                    j.contains_edge(&set),
                    "{set:?}"
                );
            }
        }
    }

    #[test]
    fn sudakov_counts() {
        let g = build_sudakov_g(2, 2).unwrap();
        assert_eq!(g.num_edges(), 1);
        assert_eq!(
            edge_labels(&g, g.edge(0)),
            vec![&[1, 1][..], &[1, 2], &[2, 1]]
        );
        for k in 2..=4 {
            for n in 2..=5u32 {
                let g = build_sudakov_g(k, n as usize).unwrap();
                // brute force over all (k+1)-subsets of the grid
                let labels = g.labels().unwrap();
                let mut count = 0;
                for set in (0..g.num_vertices() as Vertex).combinations(k + 1) {
                    let t: Vec<&[u32]> =
                        set.iter().map(|&v| labels[v as usize].as_slice()).collect();
                    if is_sudakov_edge(&t, k) {
                        count += 1;
                        assert!(g.contains_edge(&set));
                    }
                }
                assert_eq!(count, g.num_edges());
                assert_eq!(count as u64, binom(n as u64, 2) * binom(n as u64, k as u64));
            }
        }
        assert_eq!(build_sudakov_g(4, 3).unwrap().num_edges(), 0);
        for n in 2..=5 {
            assert_eq!(build_sudakov_g(2, n).unwrap(), build_h2(n).unwrap());
        }
    }

    #[test]
    fn hf_edges() {
        let h = build_hf(2).unwrap();
        let grid = GridIndexer::new(3, 2).unwrap();
        let mut e: Vec<Vertex> = [[1, 1, 1], [1, 1, 2], [1, 2, 1], [2, 1, 1]]
            .iter()
            .map(|t| grid.encode(t).unwrap())
            .collect();
        e.sort_unstable();
        assert!(h.contains_edge(&e));
        for edge in h.edges() {
            assert!(is_hf_edge(&edge_labels(&h, edge)));
        }
    }

    #[test]
    fn hf_cover_enumeration_matches_brute_force() {
        // same edge set from both enumeration strategies
        for n in 2..=3usize {
            let brute = build_hf(n).unwrap();
            let grid = GridIndexer::new(3, n).unwrap();
            let labels = grid.labels();
            let mut edges = Vec::new();
            for trio in (0..grid.len() as Vertex).combinations(3) {
                for t in 0..grid.len() as Vertex {
                    if trio.contains(&t) {
                        continue;
                    }
                    let covered = (0..3).all(|i| {
                        trio.iter()
                            .any(|&u| labels[u as usize][i] == labels[t as usize][i])
                    });
                    if covered {
                        let mut e = trio.clone();
                        e.push(t);
                        edges.push(e);
                    }
                }
            }
            let cover = Hypergraph::new(4, grid.len(), edges)
                .unwrap()
                .with_labels(labels)
                .unwrap();
            assert_eq!(brute, cover);
        }
    }

    #[test]
    fn unions() {
        let h = build_h2(2).unwrap();
        let u1 = disjoint_union(&h, 1).unwrap();
        assert_eq!(u1, h);
        let u2 = disjoint_union(&h, 2).unwrap();
        assert_eq!(
            (u2.num_vertices(), u2.num_edges(), u2.max_degree()),
            (8, 2, 1)
        );
        assert_eq!(u2.label(4).unwrap(), &[2, 1, 1]);
        assert!(disjoint_union(&h, 0).is_err());
        let spec = ConstructionSpec::union_of(ConstructionSpec::new(Family::H2, 2, 2), 3);
        assert_eq!(spec.build().unwrap().num_edges(), 3);
    }

    #[test]
    fn deterministic() {
        for spec in [
            ConstructionSpec::new(Family::Jk, 3, 2),
            ConstructionSpec::new(Family::Hf, 3, 3),
            ConstructionSpec::new(Family::SudakovG, 3, 4),
        ] {
            assert_eq!(
                spec.build().unwrap().to_json(),
                spec.build().unwrap().to_json()
            );
        }
    }
}
