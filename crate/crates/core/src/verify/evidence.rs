use itertools::Itertools;
use num_rational::Ratio;
use serde::Serialize;
use serde_json::Value;

use super::suites::{link_profile, ComponentShape};
use crate::constructions::{
    canonical_dk, is_cluster_copy, is_h2_edge, is_hf_edge, is_hk_edge, is_sudakov_edge,
};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::patterns::{is_sunflower, tuple_as_set, PatternRef};
use crate::search::Witness;
use crate::solvers::{allowed_edges, is_independent, SubsetWitness};

/// Which definition an edge must satisfy, read off its coordinate labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum EdgeRule {
    H2,
    Hk,
    Jk { k: usize },
    SudakovG { k: usize },
    Hf,
}

impl EdgeRule {
    pub fn accepts(&self, tuples: &[&[u32]]) -> bool {
        match *self {
            EdgeRule::H2 => is_h2_edge(tuples),
            EdgeRule::Hk => is_hk_edge(tuples),
            EdgeRule::Jk { k } => {
                tuples.iter().all(|t| t.len() == k)
                    && canonical_dk(k).is_ok_and(|member| is_cluster_copy(tuples, &member))
            }
            EdgeRule::SudakovG { k } => is_sudakov_edge(tuples, k),
            EdgeRule::Hf => is_hf_edge(tuples),
        }
    }
}

/// How an edge is charged to a small subset of itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChargeRule {
    /// Lexicographically least pair of tuples differing in every coordinate.
    DisjointPair,
    /// Lexicographically least three tuples whose union covers the fourth.
    CoveringTriple,
}

impl ChargeRule {
    pub fn size(&self) -> usize {
        match self {
            ChargeRule::DisjointPair => 2,
            ChargeRule::CoveringTriple => 3,
        }
    }

    /// The charged subset of `edge` (sorted host vertices), or `None` when
    /// the edge has no admissible subset or the host has no labels.
    pub fn charge(&self, host: &Hypergraph, edge: &[Vertex]) -> Option<Vec<Vertex>> {
        let labels: Vec<&[u32]> = edge.iter().map(|&v| host.label(v)).collect::<Option<_>>()?;
        match self {
            ChargeRule::DisjointPair => (0..edge.len()).tuple_combinations().find_map(|(i, j)| {
                let (a, b) = (labels[i], labels[j]);
                (a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x != y))
                    .then(|| vec![edge[i], edge[j]])
            }),
            ChargeRule::CoveringTriple => {
                if edge.len() != 4 {
                    return None;
                }
                (0..4).combinations(3).find_map(|idx| {
                    let rest = (0..4).find(|i| !idx.contains(i)).expect("one left over");
                    let union: Vec<u32> =
                        idx.iter().flat_map(|&i| tuple_as_set(labels[i])).collect();
                    let covered = tuple_as_set(labels[rest]).iter().all(|x| union.contains(x));
                    covered.then(|| idx.iter().map(|&i| edge[i]).collect())
                })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "defect", rename_all = "snake_case")]
pub enum LinkDefect {
    NotCompleteBipartite,
    /// A second component that is neither a star nor a single edge.
    ExtraNonStar,
    Codegree {
        pair: (Vertex, Vertex),
        codegree: u64,
    },
}

/// What a claim's verdict rests on. Counterexample variants can be
/// confirmed against the host by [`Evidence::recheck`].
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Values {
        values: Value,
    },
    NoCopy {
        pattern: PatternRef,
        nodes_explored: u64,
    },
    Copy {
        pattern: PatternRef,
        witness: Witness,
    },
    ForeignEdge {
        rule: EdgeRule,
        edge: Vec<Vertex>,
    },
    EdgeCount {
        expected: u64,
        observed: u64,
    },
    AverageDegree {
        #[serde(with = "crate::ratio_serde")]
        expected: Ratio<u64>,
        #[serde(with = "crate::ratio_serde")]
        observed: Ratio<u64>,
    },
    LinkDefect {
        vertex: Vertex,
        component: Vec<Vertex>,
        #[serde(flatten)]
        defect: LinkDefect,
    },
    /// An independent set larger than `bound`.
    IndependentSet {
        vertices: Vec<Vertex>,
        bound: u64,
    },
    DegreeExcess {
        vertex: Vertex,
        degree: u64,
        bound: u64,
    },
    DenseSubset {
        #[serde(with = "crate::ratio_serde")]
        c: Ratio<u64>,
        #[serde(with = "crate::ratio_serde")]
        r: Ratio<u64>,
        subset: SubsetWitness,
    },
    /// More than `bound` edges charged to `set`.
    Overcharged {
        rule: ChargeRule,
        set: Vec<Vertex>,
        edges: Vec<Vec<Vertex>>,
        bound: u64,
    },
    Unchargeable {
        rule: ChargeRule,
        edge: Vec<Vertex>,
    },
    /// An edge whose tuples form a sunflower.
    SunflowerEdge {
        edge: Vec<Vertex>,
    },
    Skipped {
        reason: String,
    },
}

impl Evidence {
    pub fn values(values: Value) -> Self {
        Evidence::Values { values }
    }

    /// Confirms a counterexample against `host` without trusting the code
    /// that produced it. Non-counterexample evidence rechecks as `false`.
    pub fn recheck(&self, host: &Hypergraph) -> bool {
        let labels_of = |edge: &[Vertex]| -> Option<Vec<&[u32]>> {
            edge.iter().map(|&v| host.label(v)).collect()
        };
        match self {
            Evidence::Copy { pattern, witness } => {
                pattern.build().is_ok_and(|p| witness.validate(host, &p))
            }
            Evidence::ForeignEdge { rule, edge } => {
                host.contains_edge(edge) && labels_of(edge).is_some_and(|t| !rule.accepts(&t))
            }
            Evidence::EdgeCount { expected, observed } => {
                host.num_edges() as u64 == *observed && observed != expected
            }
            Evidence::AverageDegree { expected, observed } => {
                host.degree_stats()
                    .is_ok_and(|s| s.average_degree == *observed)
                    && observed != expected
            }
            Evidence::LinkDefect {
                vertex,
                component,
                defect,
            } => {
                let Ok(profile) = link_profile(host, *vertex) else {
                    return false;
                };
                let Some(c) = profile.iter().find(|c| c.vertices == *component) else {
                    return false;
                };
                match defect {
                    LinkDefect::NotCompleteBipartite => c.shape == ComponentShape::Other,
                    LinkDefect::ExtraNonStar => {
                        c.shape == ComponentShape::CompleteBipartite
                            && profile
                                .iter()
                                .filter(|c| c.shape == ComponentShape::CompleteBipartite)
                                .count()
                                > 1
                    }
                    LinkDefect::Codegree { pair, codegree } => {
                        c.shape == ComponentShape::CompleteBipartite
                            && c.edges.contains(&[pair.0, pair.1])
                            && host.codegree(pair.0, pair.1) as u64 == *codegree
                            && *codegree != 1
                    }
                }
            }
            Evidence::IndependentSet { vertices, bound } => {
                vertices.iter().all_unique()
                    && vertices.len() as u64 > *bound
                    && is_independent(host, vertices)
            }
            Evidence::DegreeExcess {
                vertex,
                degree,
                bound,
            } => {
                (*vertex as usize) < host.num_vertices()
                    && host.degree(*vertex) as u64 == *degree
                    && degree > bound
            }
            Evidence::DenseSubset { c, r, subset } => {
                let mut member = vec![false; host.num_vertices()];
                for &v in &subset.vertices {
                    match member.get_mut(v as usize) {
                        Some(m) => *m = true,
                        None => return false,
                    }
                }
                let size = member.iter().filter(|&&m| m).count() as u64;
                host.spanned_edges(&member) as u64 > allowed_edges(*c, *r, size)
            }
            Evidence::Overcharged {
                rule,
                set,
                edges,
                bound,
            } => {
                edges.iter().all_unique()
                    && edges.len() as u64 > *bound
                    && edges.iter().all(|e| {
                        host.contains_edge(e) && rule.charge(host, e).as_ref() == Some(set)
                    })
            }
            Evidence::Unchargeable { rule, edge } => {
                host.contains_edge(edge) && rule.charge(host, edge).is_none()
            }
            Evidence::SunflowerEdge { edge } => {
                host.contains_edge(edge)
                    && labels_of(edge).is_some_and(|t| {
                        let sets: Vec<Vec<u32>> = t.iter().map(|x| tuple_as_set(x)).collect();
                        is_sunflower(&sets).is_ok_and(|s| s.is_sunflower())
                    })
            }
            Evidence::Values { .. } | Evidence::NoCopy { .. } | Evidence::Skipped { .. } => false,
        }
    }
}
