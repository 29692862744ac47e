//! Catalog of small forbidden configurations, plus the set-system
//! predicates (sunflowers, the union-containment family) used by the
//! 4-uniform construction.

use itertools::Itertools;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

/// Part and order annotation for patterns that live on a k-partite base.
///
/// Pattern vertices sharing a `parts` entry must land in one host part and
/// vertices with different entries in different parts. Every pair in
/// `increasing` is `(lo, hi)`: same part, and `value(lo) < value(hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartOrder {
    pub parts: Vec<u32>,
    pub increasing: Vec<(Vertex, Vertex)>,
}

/// A small hypergraph, matched up to relabeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Hypergraph,
    constraints: Option<PartOrder>,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Hypergraph) -> Self {
        Self {
            name: name.into(),
            graph,
            constraints: None,
        }
    }

    pub fn with_constraints(mut self, constraints: PartOrder) -> Result<Self> {
        let n = self.graph.num_vertices();
        if constraints.parts.len() != n
            || constraints
                .increasing
                .iter()
                .any(|&(a, b)| a as usize >= n || b as usize >= n)
        {
            return Err(Error::InvalidParameter(
                "constraints reference vertices outside the pattern".into(),
            ));
        }
        self.constraints = Some(constraints);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn constraints(&self) -> Option<&PartOrder> {
        self.constraints.as_ref()
    }

    pub fn uniformity(&self) -> usize {
        self.graph.uniformity()
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }

    /// The same pattern with part/order annotations dropped.
    pub fn unconstrained(&self) -> Pattern {
        Pattern {
            name: self.name.clone(),
            graph: self.graph.clone(),
            constraints: None,
        }
    }
}

fn plain(name: String, k: usize, n: usize, edges: Vec<Vec<Vertex>>) -> Pattern {
    Pattern::new(
        name,
        Hypergraph::new(k, n, edges).expect("catalog patterns are well formed"),
    )
}

/// `K_t^(k)`: all k-subsets of t vertices.
pub fn complete_pattern(t: usize, k: usize) -> Result<Pattern> {
    if k == 0 || t < k {
        return Err(Error::InvalidParameter(format!(
            "complete pattern needs t >= k >= 1 (t={t}, k={k})"
        )));
    }
    let edges = (0..t as Vertex).combinations(k).collect();
    Ok(plain(format!("K_{t}^({k})"), k, t, edges))
}

/// `K_4^(3)` minus one edge. Vertex 0 has a triangle as its link.
pub fn k4_minus() -> Pattern {
    plain(
        "K4-".into(),
        3,
        4,
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]],
    )
}

/// `T_k`: k edges through a common (k-1)-set plus the edge of their k tips.
/// Vertices `0..k-1` form the common set, `k-1..2k-1` the tips.
pub fn tk_pattern(k: usize) -> Result<Pattern> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "T_k needs k >= 2 (got {k})"
        )));
    }
    let common: Vec<Vertex> = (0..k as Vertex - 1).collect();
    let tips: Vec<Vertex> = (k as Vertex - 1..2 * k as Vertex - 1).collect();
    let mut edges: Vec<Vec<Vertex>> = tips
        .iter()
        .map(|&t| common.iter().copied().chain([t]).collect())
        .collect();
    edges.push(tips);
    Ok(plain(format!("T_{k}"), k, 2 * k - 1, edges))
}

/// 3-uniform tight path on `s + 2` vertices.
pub fn tight_path(s: usize) -> Result<Pattern> {
    if s < 1 {
        return Err(Error::InvalidParameter("tight path needs s >= 1".into()));
    }
    let edges = (0..s as Vertex).map(|i| vec![i, i + 1, i + 2]).collect();
    Ok(plain(format!("P_{s}"), 3, s + 2, edges))
}

/// Strong k-simplex: central edge `{v_1..v_k}` and, for each i, the edge
/// with `v_i` swapped for `v_i'`. Vertex `2i` is `v_{i+1}`, `2i+1` its primed twin.
pub fn strong_simplex(k: usize) -> Result<Pattern> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "strong simplex needs k >= 2 (got {k})"
        )));
    }
    let central: Vec<Vertex> = (0..k as Vertex).map(|i| 2 * i).collect();
    let mut edges = vec![central.clone()];
    for i in 0..k {
        let mut e = central.clone();
        e[i] = 2 * i as Vertex + 1;
        edges.push(e);
    }
    Ok(plain(format!("S_{k}"), k, 2 * k, edges))
}

/// Positive strong k-simplex: the strong simplex with `v_i, v_i'` in part i
/// and `v_i' > v_i`.
pub fn positive_simplex_pattern(k: usize) -> Result<Pattern> {
    let base = strong_simplex(k)?;
    let constraints = PartOrder {
        parts: (0..2 * k as u32).map(|v| v / 2).collect(),
        increasing: (0..k as Vertex).map(|i| (2 * i, 2 * i + 1)).collect(),
    };
    let mut p = base.with_constraints(constraints)?;
    p.name = format!("S+_{k}");
    Ok(p)
}

/// `F_5 = {abc, abd, cde}`.
pub fn f5() -> Pattern {
    plain(
        "F5".into(),
        3,
        5,
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![2, 3, 4]],
    )
}

/// `C_3 = {abc, cde, efa}`.
pub fn c3() -> Pattern {
    plain(
        "C3".into(),
        3,
        6,
        vec![vec![0, 1, 2], vec![2, 3, 4], vec![0, 4, 5]],
    )
}

/// A catalog entry by name, so reports and command lines can refer to it.
///
/// Text forms: `k4`, `k4minus`, `tk:K`, `path:S`, `complete:T:K`,
/// `simplex:K`, `simplex+:K`, `dk:K`, `f5`, `c3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum PatternRef {
    K4,
    K4Minus,
    Tk { k: usize },
    TightPath { s: usize },
    Complete { t: usize, k: usize },
    StrongSimplex { k: usize },
    PositiveSimplex { k: usize },
    Cluster { k: usize },
    F5,
    C3,
}

impl PatternRef {
    pub fn build(&self) -> Result<Pattern> {
        match *self {
            PatternRef::K4 => complete_pattern(4, 3),
            PatternRef::K4Minus => Ok(k4_minus()),
            PatternRef::Tk { k } => tk_pattern(k),
            PatternRef::TightPath { s } => tight_path(s),
            PatternRef::Complete { t, k } => complete_pattern(t, k),
            PatternRef::StrongSimplex { k } => strong_simplex(k),
            PatternRef::PositiveSimplex { k } => positive_simplex_pattern(k),
            PatternRef::Cluster { k } => crate::constructions::canonical_dk(k).map(|c| c.pattern),
            PatternRef::F5 => Ok(f5()),
            PatternRef::C3 => Ok(c3()),
        }
    }
}

impl fmt::Display for PatternRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternRef::K4 => write!(f, "k4"),
            PatternRef::K4Minus => write!(f, "k4minus"),
            PatternRef::Tk { k } => write!(f, "tk:{k}"),
            PatternRef::TightPath { s } => write!(f, "path:{s}"),
            PatternRef::Complete { t, k } => write!(f, "complete:{t}:{k}"),
            PatternRef::StrongSimplex { k } => write!(f, "simplex:{k}"),
            PatternRef::PositiveSimplex { k } => write!(f, "simplex+:{k}"),
            PatternRef::Cluster { k } => write!(f, "dk:{k}"),
            PatternRef::F5 => write!(f, "f5"),
            PatternRef::C3 => write!(f, "c3"),
        }
    }
}

impl FromStr for PatternRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown pattern '{s}'"));
        let mut parts = s.split(':');
        let head = parts.next().unwrap_or_default();
        let args: Vec<usize> = parts
            .map(|a| a.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let r = match (head, args.as_slice()) {
            ("k4", []) => PatternRef::K4,
            ("k4minus", []) => PatternRef::K4Minus,
            ("tk", [k]) => PatternRef::Tk { k: *k },
            ("path", [s]) => PatternRef::TightPath { s: *s },
            ("complete", [t, k]) => PatternRef::Complete { t: *t, k: *k },
            ("simplex", [k]) => PatternRef::StrongSimplex { k: *k },
            ("simplex+", [k]) => PatternRef::PositiveSimplex { k: *k },
            ("dk", [k]) => PatternRef::Cluster { k: *k },
            ("f5", []) => PatternRef::F5,
            ("c3", []) => PatternRef::C3,
            _ => return Err(bad()),
        };
        r.build()?;
        Ok(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SunflowerCheck {
    Sunflower {
        core: Vec<u32>,
        petals: Vec<Vec<u32>>,
    },
    NotSunflower {
        pair: (usize, usize),
    },
}

impl SunflowerCheck {
    pub fn is_sunflower(&self) -> bool {
        matches!(self, SunflowerCheck::Sunflower { .. })
    }
}

fn sorted_set(s: &[u32]) -> Vec<u32> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .copied()
        .filter(|x| b.binary_search(x).is_ok())
        .collect()
}

/// Sets form a sunflower iff every pairwise intersection is the same core.
/// On failure, reports the first pair whose intersection differs from the
/// intersection of the first two sets.
pub fn is_sunflower(sets: &[Vec<u32>]) -> Result<SunflowerCheck> {
    if sets.len() < 2 {
        return Err(Error::InvalidParameter(
            "a sunflower check needs at least two sets".into(),
        ));
    }
    let sets: Vec<Vec<u32>> = sets.iter().map(|s| sorted_set(s)).collect();
    let core = intersect(&sets[0], &sets[1]);
    for (i, j) in (0..sets.len()).tuple_combinations() {
        if intersect(&sets[i], &sets[j]) != core {
            return Ok(SunflowerCheck::NotSunflower { pair: (i, j) });
        }
    }
    let petals = sets
        .iter()
        .map(|s| {
            s.iter()
                .copied()
                .filter(|x| core.binary_search(x).is_err())
                .collect()
        })
        .collect();
    Ok(SunflowerCheck::Sunflower { core, petals })
}

/// A coordinate tuple viewed as a transversal set over the disjoint union
/// of its parts: coordinate `i` with value `v` becomes element `(i << 24) | v`.
pub fn tuple_as_set(tuple: &[u32]) -> Vec<u32> {
    tuple
        .iter()
        .enumerate()
        .map(|(i, &v)| ((i as u32) << 24) | v)
        .collect()
}

/// True iff some set is contained in the union of the others.
pub fn some_set_covered(sets: &[Vec<u32>]) -> bool {
    (0..sets.len()).any(|i| {
        sets[i].iter().all(|x| {
            sets.iter()
                .enumerate()
                .any(|(j, s)| j != i && s.contains(x))
        })
    })
}

/// Membership in the union-containment family: four 3-sets, one of which
/// lies inside the union of the other three.
pub fn matches_f_family(sets: &[Vec<u32>]) -> Result<bool> {
    if sets.len() != 4 || sets.iter().any(|s| sorted_set(s).len() != 3) {
        return Err(Error::InvalidParameter("expected four 3-sets".into()));
    }
    Ok(some_set_covered(sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{contains_pattern, SearchOutcome};

    #[test]
    fn pattern_refs_round_trip() {
        for text in [
            "k4",
            "k4minus",
            "tk:3",
            "path:4",
            "complete:5:3",
            "simplex:2",
            "simplex+:3",
            "dk:3",
            "f5",
            "c3",
        ] {
            let r: PatternRef = text.parse().unwrap();
            assert_eq!(r.to_string(), text);
            r.build().unwrap();
        }
        for bad in ["", "tk", "tk:1", "path:x", "k4:2", "sunflower"] {
            assert!(bad.parse::<PatternRef>().is_err(), "{bad}");
        }
    }

    #[test]
    fn complete_counts() {
        assert_eq!(complete_pattern(4, 3).unwrap().num_edges(), 4);
        assert_eq!(complete_pattern(3, 3).unwrap().num_edges(), 1);
        assert_eq!(complete_pattern(5, 3).unwrap().num_edges(), 10);
        assert!(complete_pattern(2, 3).is_err());
    }

    #[test]
    fn k4_minus_shape() {
        let p = k4_minus();
        assert_eq!((p.num_vertices(), p.num_edges()), (4, 3));
        let link = p.graph().link(0).unwrap();
        let tri = tk_pattern(2).unwrap();
        assert!(matches!(
            contains_pattern(&link, &tri, None).unwrap(),
            SearchOutcome::Found(_)
        ));
        let k4 = complete_pattern(4, 3).unwrap();
        assert!(matches!(
            contains_pattern(k4.graph(), &p, None).unwrap(),
            SearchOutcome::Found(_)
        ));
    }

    #[test]
    fn tk_shapes() {
        let t3 = tk_pattern(3).unwrap();
        let want = Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 1, 4], [2, 3, 4]]).unwrap();
        assert_eq!(t3.graph(), &want);
        let t2 = tk_pattern(2).unwrap();
        assert_eq!(
            t2.graph(),
            &Hypergraph::new(2, 3, [[0, 1], [0, 2], [1, 2]]).unwrap()
        );
        for k in 2..=5 {
            let t = tk_pattern(k).unwrap();
            assert_eq!((t.num_edges(), t.num_vertices()), (k + 1, 2 * k - 1));
        }
        assert!(tk_pattern(1).is_err());
    }

    #[test]
    fn tight_paths() {
        assert_eq!(tight_path(1).unwrap().num_edges(), 1);
        assert_eq!(tight_path(2).unwrap().num_vertices(), 4);
        let p4 = tight_path(4).unwrap();
        assert_eq!((p4.num_vertices(), p4.num_edges()), (6, 4));
        assert!(tight_path(0).is_err());
    }

    #[test]
    fn positive_simplex() {
        let p = positive_simplex_pattern(2).unwrap();
        // v1=0, v1'=1, v2=2, v2'=3: the path 1-2-0-3
        assert_eq!(
            p.graph(),
            &Hypergraph::new(2, 4, [[0, 2], [1, 2], [0, 3]]).unwrap()
        );
        for k in 2..=5 {
            assert_eq!(positive_simplex_pattern(k).unwrap().num_edges(), k + 1);
        }
        let s3 = strong_simplex(3).unwrap();
        let free = positive_simplex_pattern(3).unwrap().unconstrained();
        assert_eq!(free.graph(), s3.graph());
    }

    #[test]
    fn sunflowers() {
        let s =
            is_sunflower(&[vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5], vec![1, 2, 6]]).unwrap();
        match s {
            SunflowerCheck::Sunflower { core, petals } => {
                assert_eq!(core, vec![1, 2]);
                assert_eq!(petals, vec![vec![3], vec![4], vec![5], vec![6]]);
            }
            _ => panic!("expected a sunflower"),
        }
        let s = is_sunflower(&[vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap();
        assert_eq!(
            s,
            SunflowerCheck::Sunflower {
                core: vec![],
                petals: vec![vec![1, 2], vec![3, 4], vec![5, 6]]
            }
        );
        let s = is_sunflower(&[vec![1, 2, 3], vec![1, 2, 4], vec![3, 4, 5]]).unwrap();
        assert_eq!(s, SunflowerCheck::NotSunflower { pair: (0, 2) });
    }

    #[test]
    fn f_family() {
        let t = |a: [u32; 3]| tuple_as_set(&a);
        let edge = [t([1, 1, 1]), t([1, 1, 2]), t([1, 2, 1]), t([2, 1, 1])];
        assert!(matches_f_family(&edge).unwrap());
        // sunflower with core {a1} and disjoint petals
        let flower = [t([1, 1, 1]), t([1, 2, 2]), t([1, 3, 3]), t([1, 4, 4])];
        assert!(!matches_f_family(&flower).unwrap());
        for perm in (0..4).permutations(4) {
            let p: Vec<Vec<u32>> = perm.iter().map(|&i| edge[i].clone()).collect();
            assert!(matches_f_family(&p).unwrap());
        }
        assert!(matches_f_family(&edge[..3]).is_err());
    }
}
