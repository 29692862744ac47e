//! Claim suites: each construction is run through a fixed list of checks,
//! and every check produces a verdict plus the evidence behind it.
//!
//! A failed claim always carries evidence that [`Evidence::recheck`] can
//! confirm against the host from scratch. Skipped claims say which ceiling
//! stopped them.

mod evidence;
mod ramsey;
mod suites;

use std::io::Write;
use std::time::Instant;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::constructions::{build_h2, build_hf, build_hk, build_jk, build_sudakov_g, Family};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::solvers::{DEFAULT_SAMPLE_SEED, DEFAULT_ZARANKIEWICZ_CEILING};

pub use evidence::{ChargeRule, EdgeRule, Evidence, LinkDefect};
pub use ramsey::{ramsey_certificate, ramsey_lower_witness, RamseyCertificate};
pub use suites::{link_profile, sunflower_quadruples, ComponentShape, LinkComponent};

/// Vertex ceiling for exact independence numbers inside suites. `H2(6)`
/// has 36 vertices; one size up takes minutes.
pub const DEFAULT_VERIFY_EXACT_CEILING: usize = 36;
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub exact_ceiling: usize,
    pub zarankiewicz_ceiling: usize,
    pub samples: usize,
    pub seed: u64,
    /// Also run the cluster claims for every member of the family (k <= 4).
    pub all_members: bool,
    /// Record `elapsed_ms` per claim. Off gives byte-identical reports.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            exact_ceiling: DEFAULT_VERIFY_EXACT_CEILING,
            zarankiewicz_ceiling: DEFAULT_ZARANKIEWICZ_CEILING,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SAMPLE_SEED,
            all_members: false,
            timing: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    /// A measured value with no bound to compare against.
    Reported,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub id: String,
    /// The statement being checked.
    pub anchor: String,
    pub parameters: Value,
    pub verdict: Verdict,
    pub witness: Evidence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportParameters {
    pub k: usize,
    pub n: usize,
    pub seed: u64,
    /// Set when the suite ran on a host with a planted extra edge.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injected_edge: Option<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub construction: String,
    pub parameters: ReportParameters,
    /// Sorted by id.
    pub claims: Vec<Claim>,
}

impl ClaimReport {
    /// No claim failed. Skipped and reported claims do not count against.
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.claims.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per claim; the evidence column holds compact JSON.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "construction",
            "id",
            "verdict",
            "anchor",
            "elapsed_ms",
            "witness",
        ])
        .map_err(|e| Error::Io(e.to_string()))?;
        for c in &self.claims {
            let verdict = serde_json::to_value(c.verdict)?;
            w.write_record([
                self.construction.as_str(),
                c.id.as_str(),
                verdict.as_str().unwrap_or_default(),
                c.anchor.as_str(),
                &c.elapsed_ms.map(|m| m.to_string()).unwrap_or_default(),
                &serde_json::to_string(&c.witness)?,
            ])
            .map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// A construction with its parameters, as a suite target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    H2 { n: usize },
    Hk { k: usize, n: usize },
    Jk { k: usize, n: usize },
    SudakovG { k: usize, n: usize },
    Hf { n: usize },
}

impl Construction {
    pub fn new(family: Family, k: usize, n: usize) -> Result<Self> {
        Ok(match family {
            Family::H2 => Construction::H2 { n },
            Family::Hk => Construction::Hk { k, n },
            Family::Jk => Construction::Jk { k, n },
            Family::SudakovG => Construction::SudakovG { k, n },
            Family::Hf => Construction::Hf { n },
            Family::DisjointUnion => {
                return Err(Error::InvalidParameter(
                    "no claim suite for disjoint unions".into(),
                ))
            }
        })
    }

    pub fn family(&self) -> Family {
        match self {
            Construction::H2 { .. } => Family::H2,
            Construction::Hk { .. } => Family::Hk,
            Construction::Jk { .. } => Family::Jk,
            Construction::SudakovG { .. } => Family::SudakovG,
            Construction::Hf { .. } => Family::Hf,
        }
    }

    pub fn k(&self) -> usize {
        match *self {
            Construction::H2 { .. } => 2,
            Construction::Hf { .. } => 3,
            Construction::Hk { k, .. }
            | Construction::Jk { k, .. }
            | Construction::SudakovG { k, .. } => k,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            Construction::H2 { n }
            | Construction::Hf { n }
            | Construction::Hk { n, .. }
            | Construction::Jk { n, .. }
            | Construction::SudakovG { n, .. } => n,
        }
    }

    pub fn build(&self) -> Result<Hypergraph> {
        match *self {
            Construction::H2 { n } => build_h2(n),
            Construction::Hk { k, n } => build_hk(k, n),
            Construction::Jk { k, n } => build_jk(k, n),
            Construction::SudakovG { k, n } => build_sudakov_g(k, n),
            Construction::Hf { n } => build_hf(n),
        }
    }

    pub fn verify(&self, options: &VerifyOptions) -> Result<ClaimReport> {
        self.verify_host(&self.build()?, options)
    }

    /// Runs the suite against `host` instead of the built construction.
    /// The host must have the construction's uniformity and vertex count.
    pub fn verify_host(&self, host: &Hypergraph, options: &VerifyOptions) -> Result<ClaimReport> {
        let (n, k) = (self.n(), self.k());
        let (uniformity, vertices) = match self {
            Construction::H2 { .. } => (3, n * n),
            Construction::Hk { .. } | Construction::Jk { .. } => (k + 1, n.pow(k as u32)),
            Construction::SudakovG { .. } => (k + 1, n * n),
            Construction::Hf { .. } => (4, n * n * n),
        };
        if host.uniformity() != uniformity || host.num_vertices() != vertices {
            return Err(Error::InvalidParameter(format!(
                "{} suite needs a {uniformity}-uniform host on {vertices} vertices",
                self.family().id()
            )));
        }
        let mut rec = Recorder::new(host, options);
        match *self {
            Construction::H2 { n } => suites::h2(&mut rec, n)?,
            Construction::Hk { k, n } => suites::hk(&mut rec, k, n)?,
            Construction::Jk { k, n } => suites::jk(&mut rec, k, n)?,
            Construction::SudakovG { k, n } => suites::sudakov(&mut rec, k, n)?,
            Construction::Hf { n } => suites::hf(&mut rec, n)?,
        }
        let mut claims = rec.claims;
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(ClaimReport {
            construction: self.family().id().to_string(),
            parameters: ReportParameters {
                k,
                n,
                seed: options.seed,
                injected_edge: None,
            },
            claims,
        })
    }
}

pub fn verify_h2(n: usize, options: &VerifyOptions) -> Result<ClaimReport> {
    Construction::H2 { n }.verify(options)
}

pub fn verify_hk(k: usize, n: usize, options: &VerifyOptions) -> Result<ClaimReport> {
    Construction::Hk { k, n }.verify(options)
}

pub fn verify_jk(k: usize, n: usize, options: &VerifyOptions) -> Result<ClaimReport> {
    Construction::Jk { k, n }.verify(options)
}

pub fn verify_sudakov(k: usize, n: usize, options: &VerifyOptions) -> Result<ClaimReport> {
    Construction::SudakovG { k, n }.verify(options)
}

pub fn verify_hf(n: usize, options: &VerifyOptions) -> Result<ClaimReport> {
    Construction::Hf { n }.verify(options)
}

/// Builds the construction, plants one seeded extra edge, and runs the
/// suite on the result.
pub fn verify_with_injected_edge(
    construction: &Construction,
    seed: u64,
    options: &VerifyOptions,
) -> Result<(Hypergraph, ClaimReport)> {
    let (host, edge) = inject_random_edge(&construction.build()?, seed)?;
    let mut report = construction.verify_host(&host, options)?;
    report.parameters.injected_edge = Some(edge);
    Ok((host, report))
}

/// Adds one uniformly random non-edge. Fails when every set is already an edge.
pub fn inject_random_edge(h: &Hypergraph, seed: u64) -> Result<(Hypergraph, Vec<Vertex>)> {
    let (n, k) = (h.num_vertices(), h.uniformity());
    let total = binomial(n as u64, k as u64);
    if total.is_none_or(|t| t <= h.num_edges() as u128) {
        return Err(Error::InvalidParameter(
            "hypergraph is complete; no non-edge to add".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let mut e: Vec<Vertex> = rand::seq::index::sample(&mut rng, n, k)
            .into_iter()
            .map(|v| v as Vertex)
            .collect();
        e.sort_unstable();
        if !h.contains_edge(&e) {
            return Ok((h.with_extra_edges(&[e.clone()])?, e));
        }
    }
    // nearly complete: take a random non-edge from the full list
    let missing: Vec<Vec<Vertex>> = (0..n as Vertex)
        .combinations(k)
        .filter(|e| !h.contains_edge(e))
        .collect();
    let e = missing[rng.random_range(0..missing.len())].clone();
    Ok((h.with_extra_edges(std::slice::from_ref(&e))?, e))
}

/// `h` with every edge meeting `vertices` removed.
pub fn clear_vertices(h: &Hypergraph, vertices: &[Vertex]) -> Result<Hypergraph> {
    let edges: Vec<Vec<Vertex>> = h
        .edges()
        .filter(|e| !e.iter().any(|v| vertices.contains(v)))
        .map(|e| e.to_vec())
        .collect();
    let out = Hypergraph::new(h.uniformity(), h.num_vertices(), edges)?;
    match h.labels() {
        Some(l) => out.with_labels(l.to_vec()),
        None => Ok(out),
    }
}

pub(crate) fn binomial(n: u64, r: u64) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    (0..r).try_fold(1u128, |acc, i| {
        acc.checked_mul((n - i) as u128)
            .map(|x| x / (i + 1) as u128)
    })
}

/// Collects claims for one suite run.
pub(crate) struct Recorder<'a> {
    host: &'a Hypergraph,
    options: &'a VerifyOptions,
    claims: Vec<Claim>,
    alpha: Option<Result<crate::solvers::SolveResult>>,
}

impl<'a> Recorder<'a> {
    fn new(host: &'a Hypergraph, options: &'a VerifyOptions) -> Self {
        Self {
            host,
            options,
            claims: Vec::new(),
            alpha: None,
        }
    }

    /// Runs `check` and records its verdict. A ceiling error becomes a
    /// skipped claim; any other error aborts the suite.
    fn claim(
        &mut self,
        id: &str,
        anchor: &str,
        parameters: Value,
        check: impl FnOnce(&mut Self) -> Result<(Verdict, Evidence)>,
    ) -> Result<()> {
        let start = Instant::now();
        let (verdict, witness) = match check(self) {
            Ok(v) => v,
            Err(e @ Error::CeilingExceeded { .. }) => (
                Verdict::Skipped,
                Evidence::Skipped {
                    reason: e.to_string(),
                },
            ),
            Err(e) => return Err(e),
        };
        self.claims.push(Claim {
            id: id.to_string(),
            anchor: anchor.to_string(),
            parameters,
            verdict,
            witness,
            elapsed_ms: self
                .options
                .timing
                .then(|| start.elapsed().as_millis() as u64),
        });
        Ok(())
    }

    /// Exact independence number of the host, solved once per suite.
    fn alpha(&mut self) -> Result<crate::solvers::SolveResult> {
        let (host, ceiling) = (self.host, self.options.exact_ceiling);
        self.alpha
            .get_or_insert_with(|| {
                crate::solvers::max_independent_set(host, &crate::solvers::MisOptions { ceiling })
            })
            .clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injected_edge_is_new() {
        let h = build_h2(3).unwrap();
        let (g, e) = inject_random_edge(&h, 5).unwrap();
        assert!(!h.contains_edge(&e) && g.contains_edge(&e));
        assert_eq!(g.num_edges(), h.num_edges() + 1);
        assert_eq!(inject_random_edge(&h, 5).unwrap().1, e);
        assert!(inject_random_edge(&build_jk(2, 2).unwrap(), 0).is_err());
    }

    #[test]
    fn clearing_vertices() {
        let h = build_h2(3).unwrap();
        let g = clear_vertices(&h, &[0]).unwrap();
        assert_eq!(g.num_edges(), h.num_edges() - h.degree(0));
        assert_eq!(g.degree(0), 0);
    }

    fn quiet() -> VerifyOptions {
        VerifyOptions {
            timing: false,
            samples: 500,
            ..Default::default()
        }
    }

    #[test]
    fn small_suites_pass() {
        for c in [
            Construction::H2 { n: 3 },
            Construction::Hk { k: 2, n: 3 },
            Construction::Jk { k: 2, n: 3 },
            Construction::SudakovG { k: 3, n: 3 },
            Construction::Hf { n: 2 },
        ] {
            let r = c.verify(&quiet()).unwrap();
            assert!(r.all_pass(), "{c:?}: {}", r.to_json());
            assert!(r.claims.windows(2).all(|w| w[0].id < w[1].id));
        }
    }

    #[test]
    fn injected_edges_are_caught() {
        for c in [
            Construction::H2 { n: 2 },
            Construction::Hk { k: 2, n: 2 },
            Construction::Jk { k: 2, n: 3 },
            Construction::SudakovG { k: 2, n: 2 },
            Construction::Hf { n: 3 },
        ] {
            let (host, r) = verify_with_injected_edge(&c, 1, &quiet()).unwrap();
            assert!(r.failures().count() > 0, "{c:?}");
            assert!(
                r.failures().all(|f| f.witness.recheck(&host)),
                "{c:?}: {}",
                r.to_json()
            );
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify_jk(2, 3, &quiet()).unwrap().to_json();
        let b = verify_jk(2, 3, &quiet()).unwrap().to_json();
        assert_eq!(a, b);
        assert!(!a.contains("elapsed_ms"));
    }

    #[test]
    fn csv_has_one_row_per_claim() {
        let r = verify_h2(2, &quiet()).unwrap();
        let mut out = Vec::new();
        r.write_csv(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), r.claims.len() + 1);
        assert!(text.starts_with("construction,id,verdict"));
    }

    #[test]
    fn wrong_host_shape_rejected() {
        let h = build_h2(3).unwrap();
        assert!(Construction::Hf { n: 2 }.verify_host(&h, &quiet()).is_err());
    }

    #[test]
    fn ceilings_skip_instead_of_guessing() {
        let opts = VerifyOptions {
            exact_ceiling: 8,
            ..quiet()
        };
        let r = verify_h2(3, &opts).unwrap();
        assert_eq!(
            r.claim("h2.e.independence_bound").unwrap().verdict,
            Verdict::Skipped
        );
        assert!(r.all_pass());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 3), Some(84));
        assert_eq!(binomial(2, 3), Some(0));
        assert_eq!(binomial(64, 4), Some(635_376));
    }
}
