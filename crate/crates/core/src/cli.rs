//! Command-line front end. Every command writes TSV (or JSON) to a string,
//! so runs are reproducible byte for byte and easy to test in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::format::{format_report, round_report};
use crate::graph::Graph;
use crate::indices::{compute_aggregates, compute_index, discriminability, IndexKind};
use crate::io::{load_edge_list, load_temporal_edge_list};
use crate::linkpred::{evaluate, EvaluateOptions, Method, DEFAULT_CANDIDATE_CAP};
use crate::sampling::{estimate, estimate_exhaustive, log2_bound, required_sample_size, AverageKind};
use crate::sssp::UnreachablePolicy;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

/// Default seed of every randomized command.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Parser)]
#[command(name = "ddindex", version, about = "Discriminative distance-based network indices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Tsv)]
    pub format: OutputFormat,

    /// Maximum worker threads; output does not depend on it.
    #[arg(long, global = true, env = "DDINDEX_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    SubstituteN,
    HarmonicZero,
}

impl From<PolicyArg> for UnreachablePolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::SubstituteN => UnreachablePolicy::SubstituteN,
            PolicyArg::HarmonicZero => UnreachablePolicy::HarmonicZero,
        }
    }
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Edge list: `u v` or `u v w` per line, `#`/`%` comments.
    #[arg(long)]
    pub input: PathBuf,

    /// Read a third column as a positive edge weight.
    #[arg(long)]
    pub weighted: bool,

    /// Restrict to the largest connected component.
    #[arg(long)]
    pub lcc: bool,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Error> {
        let g = load_edge_list(&self.input, self.weighted)?;
        Ok(if self.lcc { g.largest_connected_component() } else { g })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex, edge and component counts, plus the discriminative diameter of
    /// the largest component when it is small enough.
    Stats {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        weighted: bool,
        /// Largest component size up to which the discriminative diameter is computed.
        #[arg(long, default_value_t = 5000)]
        dd_limit: usize,
    },
    /// Per-vertex index scores and their discriminability.
    Indices {
        #[command(flatten)]
        graph: GraphInput,
        /// Index kinds: c, dc, hc, dhc, e, de.
        #[arg(long, value_delimiter = ',', default_value = "dc")]
        kind: Vec<String>,
        /// Unreachable-pair handling; defaults per index kind.
        #[arg(long, value_enum)]
        policy: Option<PolicyArg>,
        /// Multiply scores by n - 1.
        #[arg(long)]
        unnormalized: bool,
        /// Significant digits kept when counting distinct scores.
        #[arg(long, default_value_t = crate::indices::DEFAULT_DISCRIMINABILITY_DIGITS)]
        digits: u32,
    },
    /// Average path length, eccentricity, diameter and radius, classic and discriminative.
    Aggregates {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = PolicyArg::SubstituteN)]
        policy: PolicyArg,
    },
    /// Sampled estimate of ADPL or ADE.
    Estimate {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value = "adpl")]
        kind: String,
        #[arg(long, group = "size")]
        samples: Option<usize>,
        /// Sample count as a percentage of the vertex count.
        #[arg(long, group = "size")]
        sample_pct: Option<f64>,
        /// Additive error for the Hoeffding sample size (with --delta).
        #[arg(long, group = "size", requires = "delta")]
        epsilon: Option<f64>,
        #[arg(long, requires = "epsilon")]
        delta: Option<f64>,
        /// Upper bound on a per-sample contribution; defaults to log2 n.
        #[arg(long, requires = "epsilon")]
        bound: Option<f64>,
        /// Sweep every vertex once (exact value).
        #[arg(long, group = "size")]
        exhaustive: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PolicyArg::SubstituteN)]
        policy: PolicyArg,
    },
    /// Temporal link-prediction evaluation.
    Linkpred {
        /// Temporal edge list: `u v t` per line.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "0.6,0.7,0.8,0.9")]
        ratio: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "lidin,negspl,aa")]
        method: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Keep only the first K edges in time order.
        #[arg(long)]
        edge_cap: Option<usize>,
        /// AUC draw count; defaults to a tenth of the test-interval edges.
        #[arg(long)]
        nt: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CANDIDATE_CAP)]
        candidate_cap: usize,
    },
}

/// Parses `args` (program name first), runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_COMPUTATION
            }
        }
    }
}

/// Runs a parsed command and returns its report.
pub fn run(cli: &Cli) -> Result<String, Error> {
    match cli.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(|| dispatch(cli)),
        None => dispatch(cli),
    }
}

fn dispatch(cli: &Cli) -> Result<String, Error> {
    let report = match &cli.command {
        Command::Stats {
            input,
            weighted,
            dd_limit,
        } => stats(&load_edge_list(input, *weighted)?, *dd_limit)?,
        Command::Indices {
            graph,
            kind,
            policy,
            unnormalized,
            digits,
        } => indices(&graph.load()?, kind, *policy, *unnormalized, *digits)?,
        Command::Aggregates { graph, policy } => {
            let a = compute_aggregates(&graph.load()?, (*policy).into())?;
            Report::pairs(a.fields().iter().map(|&(k, v)| (k, Some(v))))
        }
        Command::Estimate {
            graph,
            kind,
            samples,
            sample_pct,
            epsilon,
            delta,
            bound,
            exhaustive,
            seed,
            policy,
        } => {
            let g = graph.load()?;
            let kind: AverageKind = kind.parse()?;
            let policy = (*policy).into();
            let result = if *exhaustive {
                estimate_exhaustive(&g, kind, policy)?
            } else {
                let t = match (samples, sample_pct, epsilon) {
                    (Some(t), _, _) => *t,
                    (_, Some(pct), _) => {
                        if pct.is_nan() || *pct <= 0.0 {
                            return Err(Error::InvalidArgument("--sample-pct must be positive".into()));
                        }
                        ((pct / 100.0 * g.n() as f64).ceil() as usize).max(1)
                    }
                    (_, _, Some(eps)) => {
                        let bound = bound.unwrap_or_else(|| log2_bound(g.n()));
                        required_sample_size(*eps, delta.unwrap_or(f64::NAN), bound)? as usize
                    }
                    _ => {
                        return Err(Error::InvalidArgument(
                            "one of --samples, --sample-pct, --epsilon/--delta or --exhaustive is required".into(),
                        ))
                    }
                };
                estimate(&g, kind, t, *seed, policy)?
            };
            let mut r = Report::pairs([("estimate", Some(result.estimate))]);
            r.push_raw("samples", result.samples_used.to_string(), json!(result.samples_used));
            match result.seed {
                Some(s) => r.push_raw("seed", s.to_string(), json!(s)),
                None => r.push_raw("seed", "NA".into(), Value::Null),
            }
            r
        }
        Command::Linkpred {
            input,
            ratio,
            method,
            seed,
            edge_cap,
            nt,
            candidate_cap,
        } => {
            let edges = load_temporal_edge_list(input)?;
            let methods = method.iter().map(|m| m.parse()).collect::<Result<Vec<Method>, _>>()?;
            let options = EvaluateOptions {
                seed: *seed,
                edge_cap: *edge_cap,
                draws: *nt,
                candidate_cap: *candidate_cap,
            };
            let report = evaluate(&edges, ratio, &methods, &options)?;
            Report {
                tsv: report.to_tsv(),
                json: serde_json::to_value(report.rounded()).expect("report serializes"),
            }
        }
    };
    Ok(match cli.format {
        OutputFormat::Tsv => report.tsv,
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("json serializes");
            s.push('\n');
            s
        }
    })
}

/// One command's output in both formats.
struct Report {
    tsv: String,
    json: Value,
}

impl Report {
    fn pairs<'a>(items: impl IntoIterator<Item = (&'a str, Option<f64>)>) -> Report {
        let mut r = Report {
            tsv: String::new(),
            json: Value::Object(Default::default()),
        };
        for (k, v) in items {
            match v {
                Some(v) => r.push_raw(k, format_report(v), json!(round_report(v))),
                None => r.push_raw(k, "NA".into(), Value::Null),
            }
        }
        r
    }

    fn push_raw(&mut self, key: &str, text: String, value: Value) {
        let _ = writeln!(self.tsv, "{key}\t{text}");
        self.json[key] = value;
    }
}

fn stats(g: &Graph, dd_limit: usize) -> Result<Report, Error> {
    let lcc = g.largest_connected_component();
    let dd = if lcc.n() >= 2 && lcc.n() <= dd_limit {
        Some(compute_aggregates(&lcc, UnreachablePolicy::SubstituteN)?.discriminative_diameter)
    } else {
        None
    };
    let mut r = Report::pairs([]);
    for (k, v) in [
        ("n", g.n()),
        ("m", g.m()),
        ("components", g.component_count()),
        ("lcc_n", lcc.n()),
        ("lcc_m", lcc.m()),
    ] {
        r.push_raw(k, v.to_string(), json!(v));
    }
    match dd {
        Some(dd) => r.push_raw("discriminative_diameter", format_report(dd), json!(round_report(dd))),
        None => r.push_raw("discriminative_diameter", "NA".into(), Value::Null),
    }
    Ok(r)
}

fn indices(
    g: &Graph,
    kinds: &[String],
    policy: Option<PolicyArg>,
    unnormalized: bool,
    digits: u32,
) -> Result<Report, Error> {
    let mut tsv = String::new();
    let mut blocks = Vec::new();
    for name in kinds {
        let kind: IndexKind = name.parse()?;
        let policy = policy.map_or_else(|| kind.default_policy(), Into::into);
        let mut index = compute_index(g, kind, policy)?;
        if unnormalized {
            index = index.unnormalized();
        }
        let disc = discriminability(&index.scores, digits);
        let _ = writeln!(tsv, "# kind={kind}");
        for (v, &s) in index.scores.iter().enumerate() {
            let _ = writeln!(tsv, "{}\t{}", g.label(v), format_report(s));
        }
        let _ = writeln!(tsv, "discriminability\t{}", format_report(disc));
        let scores: Vec<Value> = index
            .scores
            .iter()
            .enumerate()
            .map(|(v, &s)| json!({ "vertex": g.label(v), "score": round_report(s) }))
            .collect();
        blocks.push(json!({
            "kind": kind,
            "policy": policy,
            "normalized": index.normalized,
            "scores": scores,
            "discriminability": round_report(disc),
        }));
    }
    Ok(Report {
        tsv,
        json: json!({ "indices": blocks }),
    })
}
