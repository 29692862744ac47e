//! Uniform hypergraphs with a canonical sorted edge list, plus the
//! derived structures the rest of the crate consumes (links, induced
//! subhypergraphs, degree statistics, components of 2-graphs).

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// On-disk / wire form. May hold invalid data; see [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphData {
    pub uniformity: usize,
    pub num_vertices: usize,
    pub edges: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    WrongEdgeSize { edge: usize, size: usize },
    RepeatedVertex { edge: usize },
    UnsortedEdge { edge: usize },
    VertexOutOfRange { edge: usize, vertex: u64 },
    UnsortedEdgeList { edge: usize },
    DuplicateEdge { edge: usize },
    LabelCount { labels: usize },
    ZeroUniformity,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongEdgeSize { edge, size } => {
                write!(f, "wrong edge size: edge #{edge} has {size} vertices")
            }
            Violation::RepeatedVertex { edge } => write!(f, "repeated vertex in edge #{edge}"),
            Violation::UnsortedEdge { edge } => write!(f, "unsorted edge #{edge}"),
            Violation::VertexOutOfRange { edge, vertex } => {
                write!(f, "vertex out of range: {vertex} in edge #{edge}")
            }
            Violation::UnsortedEdgeList { edge } => {
                write!(f, "unsorted edge list at edge #{edge}")
            }
            Violation::DuplicateEdge { edge } => write!(f, "duplicate edge #{edge}"),
            Violation::LabelCount { labels } => {
                write!(f, "label count {labels} differs from num_vertices")
            }
            Violation::ZeroUniformity => write!(f, "uniformity must be positive"),
        }
    }
}

/// Reports every invariant violation in `data`. An empty list means valid.
pub fn validate(data: &HypergraphData) -> Vec<Violation> {
    let mut out = Vec::new();
    if data.uniformity == 0 {
        out.push(Violation::ZeroUniformity);
    }
    for (i, e) in data.edges.iter().enumerate() {
        if e.len() != data.uniformity {
            out.push(Violation::WrongEdgeSize {
                edge: i,
                size: e.len(),
            });
        }
        if let Some(&v) = e.iter().find(|&&v| v >= data.num_vertices as u64) {
            out.push(Violation::VertexOutOfRange { edge: i, vertex: v });
        }
        let mut sorted = e.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            out.push(Violation::RepeatedVertex { edge: i });
        } else if sorted != *e {
            out.push(Violation::UnsortedEdge { edge: i });
        }
        if i > 0 {
            match data.edges[i - 1].cmp(e) {
                std::cmp::Ordering::Equal => out.push(Violation::DuplicateEdge { edge: i }),
                std::cmp::Ordering::Greater => out.push(Violation::UnsortedEdgeList { edge: i }),
                std::cmp::Ordering::Less => {}
            }
        }
    }
    if let Some(labels) = &data.labels {
        if labels.len() != data.num_vertices {
            out.push(Violation::LabelCount {
                labels: labels.len(),
            });
        }
    }
    out
}

/// A uniform hypergraph. Edges are strictly sorted vertex arrays and the
/// edge list is sorted lexicographically without duplicates; equality is
/// equality of these canonical lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    uniformity: usize,
    num_vertices: usize,
    // flat, `uniformity` entries per edge
    edges: Vec<Vertex>,
    labels: Option<Vec<Vec<u32>>>,
}

impl Hypergraph {
    /// Builds a hypergraph from arbitrary edges: vertices inside an edge and
    /// the edge list are sorted, duplicate edges merged.
    pub fn new<I, E>(uniformity: usize, num_vertices: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        if uniformity == 0 {
            return Err(Error::InvalidHypergraph(
                "uniformity must be positive".into(),
            ));
        }
        if num_vertices > u32::MAX as usize {
            return Err(Error::InvalidHypergraph("too many vertices".into()));
        }
        let mut list: Vec<Vec<Vertex>> = Vec::new();
        for e in edges {
            let mut e = e.as_ref().to_vec();
            if e.len() != uniformity {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} has {} vertices, expected {uniformity}",
                    e.len()
                )));
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} repeats a vertex"
                )));
            }
            if let Some(&v) = e.iter().find(|&&v| v as usize >= num_vertices) {
                return Err(Error::VertexOutOfRange {
                    vertex: v as u64,
                    num_vertices,
                });
            }
            list.push(e);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self {
            uniformity,
            num_vertices,
            edges: list.into_iter().flatten().collect(),
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<Vec<u32>>) -> Result<Self> {
        if labels.len() != self.num_vertices {
            return Err(Error::InvalidHypergraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.num_vertices
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len() / self.uniformity
    }

    pub fn edge(&self, i: usize) -> &[Vertex] {
        &self.edges[i * self.uniformity..(i + 1) * self.uniformity]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[Vertex]> + '_ {
        self.edges.chunks_exact(self.uniformity)
    }

    pub fn labels(&self) -> Option<&[Vec<u32>]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&[u32]> {
        self.labels.as_ref().map(|l| l[v as usize].as_slice())
    }

    /// Index of `edge` in the canonical list; `edge` must be sorted.
    pub fn find_edge(&self, edge: &[Vertex]) -> Option<usize> {
        if edge.len() != self.uniformity {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.num_edges());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(edge) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        self.find_edge(edge).is_some()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_vertices];
        for &v in &self.edges {
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges().filter(|e| e.contains(&v)).count()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<u32>> {
        let mut inc = vec![Vec::new(); self.num_vertices];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v as usize].push(i as u32);
            }
        }
        inc
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.num_vertices == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let deg = self.degrees();
        let num_edges = self.num_edges() as u64;
        Ok(DegreeStats {
            min_degree: deg.iter().copied().min().unwrap_or(0) as u64,
            max_degree: deg.iter().copied().max().unwrap_or(0) as u64,
            average_degree: Ratio::new(
                self.uniformity as u64 * num_edges,
                self.num_vertices as u64,
            ),
            num_edges,
        })
    }

    /// The link `{S : v not in S, S + v in H}`, on the same vertex set.
    pub fn link(&self, v: Vertex) -> Result<Hypergraph> {
        self.check_vertex(v)?;
        if self.uniformity < 2 {
            return Err(Error::InvalidParameter(
                "link of a 1-uniform hypergraph".into(),
            ));
        }
        let edges = self
            .edges()
            .filter(|e| e.contains(&v))
            .map(|e| e.iter().copied().filter(|&u| u != v).collect::<Vec<_>>());
        let link = Hypergraph::new(self.uniformity - 1, self.num_vertices, edges)?;
        Ok(match &self.labels {
            Some(l) => link.with_labels(l.clone())?,
            None => link,
        })
    }

    /// Subhypergraph spanned by `subset`, relabeled densely in increasing
    /// vertex order. Duplicates in `subset` are ignored.
    pub fn induced(&self, subset: &[Vertex]) -> Result<Hypergraph> {
        let mut keep: Vec<Vertex> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut new_id = vec![u32::MAX; self.num_vertices];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v as usize] = i as u32;
        }
        let edges = self
            .edges()
            .filter(|e| e.iter().all(|&v| new_id[v as usize] != u32::MAX))
            .map(|e| e.iter().map(|&v| new_id[v as usize]).collect::<Vec<_>>());
        let h = Hypergraph::new(self.uniformity, keep.len(), edges)?;
        Ok(match &self.labels {
            Some(l) => h.with_labels(keep.iter().map(|&v| l[v as usize].clone()).collect())?,
            None => h,
        })
    }

    /// Number of edges with every vertex in `subset` (given as a membership mask).
    pub fn spanned_edges(&self, member: &[bool]) -> usize {
        self.edges()
            .filter(|e| e.iter().all(|&v| member[v as usize]))
            .count()
    }

    /// Same hypergraph with additional edges merged in.
    pub fn with_extra_edges<E: AsRef<[Vertex]>>(&self, extra: &[E]) -> Result<Hypergraph> {
        let edges = self
            .edges()
            .map(|e| e.to_vec())
            .chain(extra.iter().map(|e| e.as_ref().to_vec()));
        let h = Hypergraph::new(self.uniformity, self.num_vertices, edges)?;
        Ok(match &self.labels {
            Some(l) => h.with_labels(l.clone())?,
            None => h,
        })
    }

    /// Number of edges containing both `u` and `w`.
    pub fn codegree(&self, u: Vertex, w: Vertex) -> usize {
        self.edges()
            .filter(|e| e.contains(&u) && e.contains(&w))
            .count()
    }

    pub fn to_data(&self) -> HypergraphData {
        HypergraphData {
            uniformity: self.uniformity,
            num_vertices: self.num_vertices,
            edges: self
                .edges()
                .map(|e| e.iter().map(|&v| v as u64).collect())
                .collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_data()).expect("hypergraph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let data: HypergraphData = serde_json::from_str(text)?;
        Hypergraph::try_from(data)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.num_vertices {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v as u64,
                num_vertices: self.num_vertices,
            })
        }
    }
}

impl TryFrom<HypergraphData> for Hypergraph {
    type Error = Error;

    /// Strict: the data must already be canonical.
    fn try_from(data: HypergraphData) -> Result<Self> {
        let violations = validate(&data);
        if let Some(first) = violations.first() {
            return Err(Error::InvalidHypergraph(format!(
                "{first} ({} violation(s))",
                violations.len()
            )));
        }
        let h = Hypergraph {
            uniformity: data.uniformity,
            num_vertices: data.num_vertices,
            edges: data.edges.iter().flatten().map(|&v| v as Vertex).collect(),
            labels: None,
        };
        match data.labels {
            Some(l) => h.with_labels(l),
            None => Ok(h),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min_degree: u64,
    pub max_degree: u64,
    #[serde(with = "crate::ratio_serde")]
    pub average_degree: Ratio<u64>,
    pub num_edges: u64,
}

/// Connected components of a 2-graph, restricted to non-isolated vertices.
/// Components are ordered by their least vertex; vertices inside ascending.
pub fn connected_components(g: &Hypergraph) -> Result<Vec<Vec<Vertex>>> {
    if g.uniformity() != 2 {
        return Err(Error::UniformityMismatch {
            expected: 2,
            found: g.uniformity(),
        });
    }
    let n = g.num_vertices();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut touched = vec![false; n];
    for e in g.edges() {
        let (a, b) = (e[0] as usize, e[1] as usize);
        touched[a] = true;
        touched[b] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for v in (0..n).filter(|&v| touched[v]) {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v as Vertex);
    }
    Ok(groups.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(uniformity: usize, n: usize, edges: Vec<Vec<u64>>) -> HypergraphData {
        HypergraphData {
            uniformity,
            num_vertices: n,
            edges,
            labels: None,
        }
    }

    #[test]
    fn validate_reports_violations() {
        assert!(validate(&data(3, 4, vec![vec![0, 1, 2]])).is_empty());

        let v = validate(&data(3, 4, vec![vec![0, 1]]));
        assert!(matches!(
            v[..],
            [Violation::WrongEdgeSize { edge: 0, size: 2 }]
        ));
        assert!(v[0].to_string().starts_with("wrong edge size"));

        let v = validate(&data(3, 4, vec![vec![0, 1, 2], vec![0, 1, 2]]));
        assert!(matches!(v[..], [Violation::DuplicateEdge { edge: 1 }]));
        assert!(v[0].to_string().starts_with("duplicate edge"));

        let v = validate(&data(3, 4, vec![vec![2, 1, 7]]));
        assert!(v.contains(&Violation::VertexOutOfRange { edge: 0, vertex: 7 }));
        assert!(v.contains(&Violation::UnsortedEdge { edge: 0 }));

        let v = validate(&data(2, 4, vec![vec![1, 2], vec![0, 3]]));
        assert_eq!(v, vec![Violation::UnsortedEdgeList { edge: 1 }]);

        // the empty hypergraph is valid
        assert!(validate(&data(3, 0, vec![])).is_empty());
    }

    #[test]
    fn new_canonicalizes() {
        let h = Hypergraph::new(3, 5, [[4, 0, 2], [1, 0, 2], [2, 4, 0]]).unwrap();
        assert_eq!(h.num_edges(), 2);
        assert_eq!(h.edge(0), &[0, 1, 2]);
        assert_eq!(h.edge(1), &[0, 2, 4]);
        assert!(Hypergraph::new(3, 5, [[0, 0, 1]]).is_err());
        assert!(Hypergraph::new(3, 2, [[0, 1, 2]]).is_err());
    }

    #[test]
    fn degree_stats_exact() {
        let h = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        let s = h.degree_stats().unwrap();
        assert_eq!(s.average_degree, Ratio::new(3, 4));
        assert_eq!((s.min_degree, s.max_degree, s.num_edges), (0, 1, 1));

        let empty = Hypergraph::new(3, 5, Vec::<Vec<u32>>::new()).unwrap();
        let s = empty.degree_stats().unwrap();
        assert_eq!((s.min_degree, s.max_degree), (0, 0));
        assert_eq!(s.average_degree, Ratio::from_integer(0));

        let none = Hypergraph::new(3, 0, Vec::<Vec<u32>>::new()).unwrap();
        assert_eq!(none.degree_stats(), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn link_and_induced() {
        let h = Hypergraph::new(3, 5, [[0, 1, 2], [0, 3, 4], [1, 2, 3]]).unwrap();
        let l = h.link(0).unwrap();
        assert_eq!(l.uniformity(), 2);
        assert_eq!(
            l.edges().collect::<Vec<_>>(),
            vec![&[1, 2][..], &[3, 4][..]]
        );
        assert_eq!(h.link(4).unwrap().num_edges(), 1);
        assert!(h.link(5).is_err());

        let isolated = Hypergraph::new(3, 6, [[0, 1, 2]]).unwrap();
        assert_eq!(isolated.link(5).unwrap().num_edges(), 0);

        let all: Vec<u32> = (0..5).collect();
        assert_eq!(h.induced(&all).unwrap(), h);
        let sub = h.induced(&[3, 1, 2]).unwrap();
        assert_eq!(sub.num_vertices(), 3);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![&[0, 1, 2][..]]);
        assert!(h.induced(&[9]).is_err());
    }

    #[test]
    fn components() {
        let path = Hypergraph::new(2, 4, [[0, 1], [1, 2]]).unwrap();
        assert_eq!(connected_components(&path).unwrap(), vec![vec![0, 1, 2]]);
        let two = Hypergraph::new(2, 4, [[0, 3], [1, 2]]).unwrap();
        assert_eq!(
            connected_components(&two).unwrap(),
            vec![vec![0, 3], vec![1, 2]]
        );
        let empty = Hypergraph::new(2, 4, Vec::<Vec<u32>>::new()).unwrap();
        assert!(connected_components(&empty).unwrap().is_empty());
        let h3 = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert!(connected_components(&h3).is_err());
    }

    #[test]
    fn json_round_trip_is_strict() {
        let h = Hypergraph::new(2, 3, [[0, 1], [1, 2]])
            .unwrap()
            .with_labels(vec![vec![1], vec![2], vec![3]])
            .unwrap();
        let back = Hypergraph::from_json(&h.to_json()).unwrap();
        assert_eq!(back, h);
        let bad = r#"{"uniformity":2,"num_vertices":3,"edges":[[1,0]]}"#;
        assert!(Hypergraph::from_json(bad).is_err());
    }
}
