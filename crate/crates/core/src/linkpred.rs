//! Temporal link prediction.
//!
//! Edges are ordered by timestamp and split by count: the first share forms
//! the training graph, and pairs that first become connected afterwards are
//! the prediction targets. Every unconnected pair of training vertices is
//! ranked by one of three methods:
//!
//! * **LIDIN**: ascending `(d, dd)`: shorter distance first, and among
//!   equally distant pairs, the one joined by more shortest paths first.
//! * **NegSPL**: ascending `d` (the negated shortest-path length, descending).
//! * **AA**: descending Adamic/Adar score `sum 1/ln(deg w)` over common neighbors.
//!
//! Remaining ties fall back to ascending `(min(u,v), max(u,v))`. Rankings are
//! scored with a sampled AUC and the ranking error `Q`, the mean 1-based rank
//! of the target pairs.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::{format_report, round_report};
use crate::graph::{Graph, VertexId};
use crate::io::{LabelInterner, TemporalEdgeList};
use crate::sssp::sweep_sources;

/// Upper bound on the number of candidate pairs a ranking may hold.
pub const DEFAULT_CANDIDATE_CAP: usize = 50_000_000;

/// Training ratios of the standard evaluation protocol.
pub const PROTOCOL_RATIOS: [f64; 4] = [0.6, 0.7, 0.8, 0.9];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitSpec {
    /// Fraction of (time-ordered) edges placed in the training interval.
    pub ratio: f64,
    /// Keep only the first `edge_cap` edges in time order before splitting.
    pub edge_cap: Option<usize>,
}

impl SplitSpec {
    pub fn new(ratio: f64) -> Self {
        SplitSpec { ratio, edge_cap: None }
    }
}

#[derive(Debug, Clone)]
pub struct TrainTestSplit {
    pub train_graph: Graph,
    /// Pairs `(u, v)` with `u < v` that gain an edge in the test interval,
    /// have both endpoints in the training graph and are unconnected there.
    /// Sorted and distinct.
    pub test_pairs: Vec<(VertexId, VertexId)>,
    /// Edges (with repetitions) in the test interval, before any filtering.
    pub test_edge_count: usize,
}

impl TrainTestSplit {
    /// Draw count used when none is given: a tenth of the test-interval edges.
    pub fn default_draws(&self) -> usize {
        self.test_edge_count.div_ceil(10).max(1)
    }
}

pub fn temporal_split(edges: &TemporalEdgeList, spec: SplitSpec) -> Result<TrainTestSplit> {
    if !(spec.ratio > 0.0 && spec.ratio < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "ratio must lie in (0, 1), got {}",
            spec.ratio
        )));
    }
    let mut ordered = edges.sorted();
    if let Some(cap) = spec.edge_cap {
        ordered.truncate(cap);
    }
    if ordered.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let count = ordered.len();
    // tolerance keeps e.g. 0.7 * 10 from rounding up to 8
    let train_count = ((spec.ratio * count as f64 - 1e-9).ceil() as usize).clamp(1, count);
    let (train, test) = ordered.split_at(train_count);

    let mut interner = LabelInterner::default();
    let provisional: Vec<(VertexId, VertexId)> = train
        .iter()
        .map(|e| (interner.intern(&e.u), interner.intern(&e.v)))
        .collect();
    let (labels, remap) = interner.finish();
    let ids: HashMap<&str, VertexId> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let train_graph = Graph::build(
        labels.clone(),
        provisional.into_iter().map(|(u, v)| (remap[u], remap[v], 1.0)),
        false,
    );
    if train_graph.m() == 0 {
        return Err(Error::EmptyGraph);
    }

    let test_pairs: BTreeSet<(VertexId, VertexId)> = test
        .iter()
        .filter_map(|e| Some((*ids.get(e.u.as_str())?, *ids.get(e.v.as_str())?)))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .filter(|&(u, v)| !train_graph.has_edge(u, v))
        .collect();

    Ok(TrainTestSplit {
        train_graph,
        test_pairs: test_pairs.into_iter().collect(),
        test_edge_count: test.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Lidin,
    NegSpl,
    Aa,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Lidin, Method::NegSpl, Method::Aa];

    pub fn name(self) -> &'static str {
        match self {
            Method::Lidin => "lidin",
            Method::NegSpl => "negspl",
            Method::Aa => "aa",
        }
    }

    /// `Less` when key `a` ranks ahead of key `b`.
    pub fn compare_keys(self, a: PairKey, b: PairKey) -> Ordering {
        match self {
            Method::Lidin => a
                .primary
                .total_cmp(&b.primary)
                .then(a.secondary.total_cmp(&b.secondary)),
            Method::NegSpl => a.primary.total_cmp(&b.primary),
            Method::Aa => b.primary.total_cmp(&a.primary),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

/// Method-specific sort key. LIDIN uses `(d, dd)`, NegSPL `(d, 0)`, AA `(score, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairKey {
    pub primary: f64,
    pub secondary: f64,
}

impl PairKey {
    pub fn new(primary: f64, secondary: f64) -> Self {
        PairKey { primary, secondary }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScoredPair {
    pub u: VertexId,
    pub v: VertexId,
    pub key: PairKey,
}

/// Candidate pairs sorted best first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoredPairList {
    pub method: Method,
    pub entries: Vec<ScoredPair>,
}

impl ScoredPairList {
    /// Normalizes every pair to `u < v` and sorts best first.
    pub fn from_entries(method: Method, mut entries: Vec<ScoredPair>) -> Self {
        for e in &mut entries {
            if e.u > e.v {
                std::mem::swap(&mut e.u, &mut e.v);
            }
        }
        entries.sort_by(|a, b| {
            method
                .compare_keys(a.key, b.key)
                .then_with(|| (a.u, a.v).cmp(&(b.u, b.v)))
        });
        ScoredPairList { method, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn key_index(&self) -> HashMap<(VertexId, VertexId), PairKey> {
        self.entries.iter().map(|e| ((e.u, e.v), e.key)).collect()
    }
}

/// Ranks every unconnected pair of the training graph with `method`.
pub fn score_pairs(split: &TrainTestSplit, method: Method) -> Result<ScoredPairList> {
    score_graph_pairs(&split.train_graph, method, DEFAULT_CANDIDATE_CAP)
}

/// Ranks every unconnected pair of `g`, failing when there are more than `cap` of them.
pub fn score_graph_pairs(g: &Graph, method: Method, cap: usize) -> Result<ScoredPairList> {
    let n = g.n();
    if g.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let candidates = n * (n - 1) / 2 - g.m();
    if candidates > cap {
        return Err(Error::CandidateCapExceeded { candidates, cap });
    }
    let sources: Vec<VertexId> = (0..n).collect();
    let per_source: Vec<Vec<ScoredPair>> = match method {
        Method::Lidin | Method::NegSpl => sweep_sources(g, &sources, |r| {
            let u = r.source();
            (u + 1..n)
                .filter(|&v| !g.has_edge(u, v))
                .map(|v| {
                    // no path: d = n, sigma = 1
                    let (d, sigma) = if r.is_reachable(v) {
                        (r.dist()[v], r.sigma()[v])
                    } else {
                        (n as f64, 1.0)
                    };
                    let key = match method {
                        Method::Lidin => PairKey::new(d, d / sigma),
                        _ => PairKey::new(d, 0.0),
                    };
                    ScoredPair { u, v, key }
                })
                .collect()
        }),
        Method::Aa => adamic_adar_rows(g),
    };
    let mut entries = Vec::with_capacity(candidates);
    for row in per_source {
        entries.extend(row);
    }
    Ok(ScoredPairList::from_entries(method, entries))
}

fn adamic_adar_rows(g: &Graph) -> Vec<Vec<ScoredPair>> {
    let n = g.n();
    (0..n)
        .into_par_iter()
        .map_init(
            || vec![0.0f64; n],
            |score, u| {
                for &w in g.neighbors(u) {
                    let deg = g.degree(w);
                    // w has u and any other neighbor, so deg >= 2 for every common neighbor
                    if deg < 2 {
                        continue;
                    }
                    let contribution = 1.0 / (deg as f64).ln();
                    for &v in g.neighbors(w) {
                        if v > u {
                            score[v] += contribution;
                        }
                    }
                }
                let row = (u + 1..n)
                    .filter(|&v| !g.has_edge(u, v))
                    .map(|v| ScoredPair {
                        u,
                        v,
                        key: PairKey::new(score[v], 0.0),
                    })
                    .collect();
                for &w in g.neighbors(u) {
                    for &v in g.neighbors(w) {
                        score[v] = 0.0;
                    }
                }
                row
            },
        )
        .collect()
}

/// Sampled AUC `(n_g + 0.5 n_e) / n_t`: each of `draws` rounds pairs a
/// uniformly drawn target with a uniformly drawn non-target unconnected pair
/// (by rejection) and counts wins and ties of the target. `None` uses
/// [`TrainTestSplit::default_draws`].
pub fn auc(split: &TrainTestSplit, list: &ScoredPairList, draws: Option<usize>, seed: u64) -> Result<f64> {
    if split.test_pairs.is_empty() {
        return Err(Error::NoTestPairs);
    }
    let keys = list.key_index();
    let targets: HashSet<(VertexId, VertexId)> = split.test_pairs.iter().copied().collect();
    let negatives = keys.keys().filter(|p| !targets.contains(p)).count();
    if negatives == 0 {
        return Err(Error::NoNegativePairs);
    }
    let draws = draws.unwrap_or_else(|| split.default_draws());
    if draws == 0 {
        return Err(Error::InvalidArgument("draw count must be at least 1".into()));
    }
    let key_of = |pair: &(VertexId, VertexId)| {
        keys.get(pair)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("pair {pair:?} missing from the ranking")))
    };

    let g = &split.train_graph;
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut wins, mut ties) = (0usize, 0usize);
    for _ in 0..draws {
        let positive = split.test_pairs[rng.gen_range(0..split.test_pairs.len())];
        let negative = loop {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a == b {
                continue;
            }
            let pair = (a.min(b), a.max(b));
            if g.has_edge(pair.0, pair.1) || targets.contains(&pair) {
                continue;
            }
            break pair;
        };
        match list.method.compare_keys(key_of(&positive)?, key_of(&negative)?) {
            Ordering::Less => wins += 1,
            Ordering::Equal => ties += 1,
            Ordering::Greater => {}
        }
    }
    Ok((wins as f64 + 0.5 * ties as f64) / draws as f64)
}

/// Mean 1-based rank of the target pairs in `list`; lower is better.
pub fn ranking_error(split: &TrainTestSplit, list: &ScoredPairList) -> Result<f64> {
    if split.test_pairs.is_empty() {
        return Err(Error::NoTestPairs);
    }
    let targets: HashSet<(VertexId, VertexId)> = split.test_pairs.iter().copied().collect();
    let mut found = 0usize;
    let mut rank_sum = 0.0f64;
    for (i, e) in list.entries.iter().enumerate() {
        if targets.contains(&(e.u, e.v)) {
            found += 1;
            rank_sum += (i + 1) as f64;
        }
    }
    if found != targets.len() {
        return Err(Error::InvalidArgument(format!(
            "{} of {} target pairs are missing from the ranking",
            targets.len() - found,
            targets.len()
        )));
    }
    Ok(rank_sum / found as f64)
}

#[derive(Debug, Clone)]
pub struct EvaluateOptions {
    pub seed: u64,
    pub edge_cap: Option<usize>,
    /// AUC draw count; `None` uses a tenth of the test-interval edges.
    pub draws: Option<usize>,
    pub candidate_cap: usize,
}

impl Default for EvaluateOptions {
    fn default() -> Self {
        EvaluateOptions {
            seed: 0,
            edge_cap: None,
            draws: None,
            candidate_cap: DEFAULT_CANDIDATE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub ratio: f64,
    pub method: Method,
    /// Absent when there are no target or no non-target pairs.
    pub auc: Option<f64>,
    /// Absent when there are no target pairs.
    pub q: Option<f64>,
    pub test_pairs: usize,
    pub nt: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub const TSV_HEADER: &'static str = "ratio\tmethod\tauc\tq\ttest_pairs\tnt";

    pub fn to_tsv(&self) -> String {
        let opt = |x: Option<f64>| x.map_or_else(|| "NA".to_string(), format_report);
        let mut out = String::from(Self::TSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                format_report(r.ratio),
                r.method,
                opt(r.auc),
                opt(r.q),
                r.test_pairs,
                r.nt
            ));
        }
        out
    }

    /// Values rounded exactly as in [`Report::to_tsv`].
    pub fn rounded(&self) -> Report {
        Report {
            rows: self
                .rows
                .iter()
                .map(|r| ReportRow {
                    ratio: round_report(r.ratio),
                    auc: r.auc.map(round_report),
                    q: r.q.map(round_report),
                    ..r.clone()
                })
                .collect(),
        }
    }
}

/// Runs every `(ratio, method)` combination. Each row's AUC uses the same
/// seed, so methods at one ratio are compared on identical draws.
pub fn evaluate(
    edges: &TemporalEdgeList,
    ratios: &[f64],
    methods: &[Method],
    options: &EvaluateOptions,
) -> Result<Report> {
    let mut rows = Vec::with_capacity(ratios.len() * methods.len());
    for &ratio in ratios {
        let split = temporal_split(
            edges,
            SplitSpec {
                ratio,
                edge_cap: options.edge_cap,
            },
        )?;
        let nt = options.draws.unwrap_or_else(|| split.default_draws());
        for &method in methods {
            let (auc_value, q) = if split.test_pairs.is_empty() {
                (None, None)
            } else {
                let list = score_graph_pairs(&split.train_graph, method, options.candidate_cap)?;
                let auc_value = match auc(&split, &list, Some(nt), options.seed) {
                    Ok(a) => Some(a),
                    Err(Error::NoNegativePairs) => None,
                    Err(e) => return Err(e),
                };
                (auc_value, Some(ranking_error(&split, &list)?))
            };
            rows.push(ReportRow {
                ratio,
                method,
                auc: auc_value,
                q,
                test_pairs: split.test_pairs.len(),
                nt,
            });
        }
    }
    Ok(Report { rows })
}
