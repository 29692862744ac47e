//! Command-line front end. [`run`] parses arguments, dispatches, and maps
//! every outcome to an exit code; it never calls `process::exit` itself.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{ConstructionSpec, Family};
use crate::error::{Error, Result};
use crate::hypergraph::{validate, Hypergraph, HypergraphData};
use crate::patterns::{is_sunflower, tuple_as_set, PatternRef};
use crate::search::{contains_pattern, SearchOutcome};
use crate::solvers::{
    max_independent_set, sparsity_check, zarankiewicz_max, Forbidden, MisOptions, SparsityMode,
    ZarankiewiczOptions, DEFAULT_EXACT_CEILING, DEFAULT_SAMPLE_SEED, DEFAULT_ZARANKIEWICZ_CEILING,
};
use crate::verify::{
    inject_random_edge, ramsey_lower_witness, ChargeRule, Construction, VerifyOptions,
    DEFAULT_SAMPLES, DEFAULT_VERIFY_EXACT_CEILING,
};

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "HYPERCERT_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FOUND: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

const AFTER_HELP: &str = "\
Exit codes: 0 success / all claims pass, 1 claim failure, 2 usage or input error,
3 pattern found (verify), 4 search budget exhausted (verify).

Ceilings: exact independence number 64 vertices (alpha), 36 inside reports;
Zarankiewicz search n^k <= 30 candidate edges; exhaustive sparsity 20 vertices.

Environment: HYPERCERT_THREADS sets the worker thread count (default: all cores).
JSON goes to stdout unless --out is given.";

#[derive(Parser, Debug)]
#[command(name = "hypercert", version, about = "Build extremal hypergraph constructions and check claims about them", after_help = AFTER_HELP)]
struct Cli {
    /// Omit elapsed_ms fields so identical runs give identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    H2,
    Hk,
    Jk,
    #[value(alias = "sudakov_g")]
    Sudakov,
    Hf,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::H2 => Family::H2,
            FamilyArg::Hk => Family::Hk,
            FamilyArg::Jk => Family::Jk,
            FamilyArg::Sudakov => Family::SudakovG,
            FamilyArg::Hf => Family::Hf,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    Exhaustive,
    Sampled,
    Charging,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ChargerArg {
    /// Least pair of tuples differing in every coordinate (J_k).
    DisjointPair,
    /// Least three tuples covering the fourth (H(F)).
    CoveringTriple,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a construction and write it as hypergraph JSON with coordinate labels.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Arity; ignored by h2 (fixed 2) and hf (fixed 3).
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Number of disjoint copies.
        #[arg(long, default_value_t = 1)]
        copies: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a hypergraph file against the format invariants.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Search a hypergraph for a copy of a pattern.
    ///
    /// Patterns: k4, k4minus, tk:K, path:S, complete:T:K, simplex:K, simplex+:K,
    /// dk:K, f5, c3, and sunflower (an edge whose coordinate labels form a sunflower).
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        pattern: String,
        /// Search node budget; unbounded when omitted.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exact independence number with a witness set.
    Alpha {
        #[arg(long = "in")]
        input: PathBuf,
        /// Largest vertex count attempted.
        #[arg(long, default_value_t = DEFAULT_EXACT_CEILING)]
        exact_ceiling: usize,
    },
    /// Exact Zarankiewicz number z(n, P) over k parts of size n.
    ///
    /// P is any pattern accepted by verify (except sunflower), or `f` for the
    /// union-containment family of four triples.
    Zarankiewicz {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        /// Largest candidate edge count n^k attempted.
        #[arg(long, default_value_t = DEFAULT_ZARANKIEWICZ_CEILING)]
        ceiling: usize,
    },
    /// Check that every vertex subset S spans at most c|S|^r edges.
    Sparsity {
        #[arg(long = "in")]
        input: PathBuf,
        /// Rational, e.g. 1 or 27/6.
        #[arg(long)]
        c: String,
        /// Rational exponent, e.g. 2 or 3/2.
        #[arg(long)]
        r: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Sampled mode only.
        #[arg(long)]
        samples: Option<usize>,
        /// Sampled mode only.
        #[arg(long)]
        seed: Option<u64>,
        /// Charging mode only (required there).
        #[arg(long, value_enum)]
        charger: Option<ChargerArg>,
    },
    /// Run a construction's claim suite.
    Report {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Seed for sampled sparsity and edge injection.
        #[arg(long, default_value_t = DEFAULT_SAMPLE_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_VERIFY_EXACT_CEILING)]
        exact_ceiling: usize,
        #[arg(long, default_value_t = DEFAULT_ZARANKIEWICZ_CEILING)]
        zarankiewicz_ceiling: usize,
        /// Also check every member of the cluster family (jk, k <= 4).
        #[arg(long)]
        all_members: bool,
        /// Plant one seeded extra edge before checking (a control run).
        #[arg(long)]
        inject_edge: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Ramsey lower-bound certificate from H2(n): no red P4, no blue K_2n.
    Ramsey {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_VERIFY_EXACT_CEILING)]
        exact_ceiling: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(text) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = text.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "{THREADS_ENV} must be a positive integer, got '{text}'"
        ))
    })?;
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let timing = !cli.no_timing;
    match &cli.command {
        Command::Construct {
            family,
            k,
            n,
            copies,
            out,
        } => {
            let inner = ConstructionSpec::new((*family).into(), *k, *n);
            let spec = if *copies == 1 {
                inner
            } else {
                ConstructionSpec::union_of(inner, *copies)
            };
            let h = spec.build()?;
            write_text(out.as_deref(), &h.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Validate { input } => {
            let text = fs::read_to_string(input)
                .map_err(|e| Error::Io(format!("{}: {e}", input.display())))?;
            let data: HypergraphData = serde_json::from_str(&text)?;
            let violations: Vec<String> = validate(&data).iter().map(|v| v.to_string()).collect();
            let ok = violations.is_empty();
            emit(&json!({ "ok": ok, "violations": violations }), None, timing)?;
            Ok(if ok { EXIT_OK } else { EXIT_CLAIM_FAILED })
        }
        Command::Verify {
            input,
            pattern,
            budget,
        } => {
            let h = load(input)?;
            if pattern == "sunflower" {
                return sunflower_edge(&h, timing);
            }
            let p = pattern.parse::<PatternRef>()?.build()?;
            let outcome = contains_pattern(&h, &p, *budget)?;
            emit(&outcome, None, timing)?;
            Ok(match outcome {
                SearchOutcome::NoCopy => EXIT_OK,
                SearchOutcome::Found(_) => EXIT_FOUND,
                SearchOutcome::BudgetExhausted => EXIT_BUDGET,
            })
        }
        Command::Alpha {
            input,
            exact_ceiling,
        } => {
            let h = load(input)?;
            let r = max_independent_set(
                &h,
                &MisOptions {
                    ceiling: *exact_ceiling,
                },
            )?;
            emit(&r, None, timing)?;
            Ok(EXIT_OK)
        }
        Command::Zarankiewicz {
            k,
            n,
            pattern,
            ceiling,
        } => {
            let forbidden = if pattern == "f" {
                Forbidden::UnionContainment
            } else {
                Forbidden::Pattern(pattern.parse::<PatternRef>()?.build()?)
            };
            let r = zarankiewicz_max(
                *k,
                *n,
                &forbidden,
                &ZarankiewiczOptions { ceiling: *ceiling },
            )?;
            emit(&r, None, timing)?;
            Ok(EXIT_OK)
        }
        Command::Sparsity {
            input,
            c,
            r,
            mode,
            samples,
            seed,
            charger,
        } => {
            let (c, r) = (parse_ratio(c)?, parse_ratio(r)?);
            if *mode != ModeArg::Sampled && (samples.is_some() || seed.is_some()) {
                return Err(usage("--samples and --seed apply to --mode sampled only"));
            }
            if (*mode == ModeArg::Charging) != charger.is_some() {
                return Err(usage(
                    "--charger is required with --mode charging and rejected otherwise",
                ));
            }
            let h = load(input)?;
            let rule = charger.map(|c| match c {
                ChargerArg::DisjointPair => ChargeRule::DisjointPair,
                ChargerArg::CoveringTriple => ChargeRule::CoveringTriple,
            });
            let charge = |e: &[u32]| rule.and_then(|rule| rule.charge(&h, e));
            let mode = match mode {
                ModeArg::Exhaustive => SparsityMode::Exhaustive,
                ModeArg::Sampled => SparsityMode::Sampled {
                    samples: samples.unwrap_or(DEFAULT_SAMPLES),
                    seed: seed.unwrap_or(DEFAULT_SAMPLE_SEED),
                },
                ModeArg::Charging => SparsityMode::Charging(&charge),
            };
            match sparsity_check(&h, c, r, mode) {
                Ok(v) => {
                    emit(&v, None, timing)?;
                    Ok(if v.pass { EXIT_OK } else { EXIT_CLAIM_FAILED })
                }
                Err(e @ (Error::ChargingInconclusive { .. } | Error::Unchargeable(_))) => {
                    eprintln!("not certified: {e}");
                    Ok(EXIT_CLAIM_FAILED)
                }
                Err(e) => Err(e),
            }
        }
        Command::Report {
            family,
            k,
            n,
            seed,
            samples,
            exact_ceiling,
            zarankiewicz_ceiling,
            all_members,
            inject_edge,
            out,
            csv,
        } => {
            let options = VerifyOptions {
                exact_ceiling: *exact_ceiling,
                zarankiewicz_ceiling: *zarankiewicz_ceiling,
                samples: *samples,
                seed: *seed,
                all_members: *all_members,
                timing,
            };
            let construction = Construction::new((*family).into(), *k, *n)?;
            let report = if *inject_edge {
                let (host, edge) = inject_random_edge(&construction.build()?, *seed)?;
                let mut report = construction.verify_host(&host, &options)?;
                report.parameters.injected_edge = Some(edge);
                report
            } else {
                construction.verify(&options)?
            };
            write_text(out.as_deref(), &report.to_json())?;
            if let Some(path) = csv {
                let file = fs::File::create(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                report.write_csv(file)?;
            }
            Ok(if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_CLAIM_FAILED
            })
        }
        Command::Ramsey {
            n,
            exact_ceiling,
            out,
        } => {
            let options = VerifyOptions {
                exact_ceiling: *exact_ceiling,
                ..Default::default()
            };
            let cert = ramsey_lower_witness(*n, &options)?;
            emit(&cert, out.as_deref(), timing)?;
            Ok(if cert.certified {
                EXIT_OK
            } else {
                EXIT_CLAIM_FAILED
            })
        }
    }
}

/// First edge whose vertices' coordinate labels form a sunflower.
fn sunflower_edge(h: &Hypergraph, timing: bool) -> Result<i32> {
    if h.labels().is_none() {
        return Err(usage(
            "the sunflower pattern needs a host with coordinate labels",
        ));
    }
    for e in h.edges() {
        let sets: Vec<Vec<u32>> = e
            .iter()
            .map(|&v| tuple_as_set(h.label(v).expect("labeled")))
            .collect();
        if sets.len() >= 2 && is_sunflower(&sets)?.is_sunflower() {
            let labels: Vec<&[u32]> = e.iter().map(|&v| h.label(v).expect("labeled")).collect();
            emit(
                &json!({ "outcome": "found", "edge": e, "labels": labels }),
                None,
                timing,
            )?;
            return Ok(EXIT_FOUND);
        }
    }
    emit(&json!({ "outcome": "no_copy" }), None, timing)?;
    Ok(EXIT_OK)
}

fn load(path: &Path) -> Result<Hypergraph> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Hypergraph::from_json(&text)
}

/// `p`, or `p/q` with `q > 0`.
fn parse_ratio(text: &str) -> Result<Ratio<u64>> {
    let bad = || {
        usage(format!(
            "expected a non-negative rational like 3 or 27/6, got '{text}'"
        ))
    };
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (
            p.trim().parse().map_err(|_| bad())?,
            q.trim().parse().map_err(|_| bad())?,
        ),
        None => (text.trim().parse().map_err(|_| bad())?, 1u64),
    };
    if q == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(p, q))
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>, timing: bool) -> Result<()> {
    let mut v = serde_json::to_value(value)?;
    if !timing {
        strip_timing(&mut v);
    }
    write_text(out, &serde_json::to_string_pretty(&v)?)
}

fn write_text(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}")?;
            Ok(())
        }
    }
}
