//! Exact distance-based indices: classic closeness and eccentricity, their
//! discriminative counterparts that divide each distance by the number of
//! shortest paths, harmonic variants, graph-level aggregates, center and
//! periphery, and the discriminability measure.
//!
//! Per-vertex indices carry the `1/(n-1)` normalization; diameter and radius
//! (classic and discriminative) are unnormalized.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::sssp::{sweep_sources, SsspResult, UnreachablePolicy};

/// Significant decimal digits kept when counting distinct scores.
pub const DEFAULT_DISCRIMINABILITY_DIGITS: u32 = 9;

type Term = fn(f64) -> f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    Closeness,
    DiscriminativeCloseness,
    HarmonicCloseness,
    DiscriminativeHarmonicCloseness,
    Eccentricity,
    DiscriminativeEccentricity,
    Generalized,
}

impl IndexKind {
    pub const BUILTIN: [IndexKind; 6] = [
        IndexKind::Closeness,
        IndexKind::DiscriminativeCloseness,
        IndexKind::HarmonicCloseness,
        IndexKind::DiscriminativeHarmonicCloseness,
        IndexKind::Eccentricity,
        IndexKind::DiscriminativeEccentricity,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            IndexKind::Closeness => "c",
            IndexKind::DiscriminativeCloseness => "dc",
            IndexKind::HarmonicCloseness => "hc",
            IndexKind::DiscriminativeHarmonicCloseness => "dhc",
            IndexKind::Eccentricity => "e",
            IndexKind::DiscriminativeEccentricity => "de",
            IndexKind::Generalized => "generalized",
        }
    }

    /// Harmonic indices drop unreachable pairs; everything else substitutes `d = n`.
    pub fn default_policy(self) -> UnreachablePolicy {
        match self {
            IndexKind::HarmonicCloseness | IndexKind::DiscriminativeHarmonicCloseness => {
                UnreachablePolicy::HarmonicZero
            }
            _ => UnreachablePolicy::SubstituteN,
        }
    }

    fn is_eccentricity(self) -> bool {
        matches!(self, IndexKind::Eccentricity | IndexKind::DiscriminativeEccentricity)
    }

    /// The `(f, g)` pair whose product is the per-pair term of this index.
    fn term(self) -> Option<(Term, Term)> {
        fn ident(x: f64) -> f64 {
            x
        }
        fn one(_: f64) -> f64 {
            1.0
        }
        fn recip(x: f64) -> f64 {
            1.0 / x
        }
        Some(match self {
            IndexKind::Closeness | IndexKind::Eccentricity => (ident, one),
            IndexKind::DiscriminativeCloseness | IndexKind::DiscriminativeEccentricity => (ident, recip),
            IndexKind::HarmonicCloseness => (recip, one),
            IndexKind::DiscriminativeHarmonicCloseness => (recip, ident),
            IndexKind::Generalized => return None,
        })
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IndexKind::BUILTIN
            .into_iter()
            .find(|k| k.short_name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown index kind {s:?}")))
    }
}

/// Per-vertex scores of one index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexVector {
    pub kind: IndexKind,
    pub scores: Vec<f64>,
    pub policy: UnreachablePolicy,
    pub normalized: bool,
}

impl IndexVector {
    /// Scores scaled by `n - 1`, the form most other tools report.
    pub fn unnormalized(&self) -> IndexVector {
        if !self.normalized {
            return self.clone();
        }
        let scale = self.scores.len().saturating_sub(1) as f64;
        IndexVector {
            scores: self.scores.iter().map(|s| s * scale).collect(),
            normalized: false,
            ..self.clone()
        }
    }

    pub fn discriminability(&self) -> f64 {
        discriminability(&self.scores, DEFAULT_DISCRIMINABILITY_DIGITS)
    }
}

/// Iterates `(d, sigma)` for every `u != source`, mapping unreachable pairs
/// through `policy`; `None` marks a pair that contributes nothing.
fn pairs(r: &SsspResult, policy: UnreachablePolicy) -> impl Iterator<Item = Option<(f64, f64)>> + '_ {
    let n = r.dist().len();
    let source = r.source();
    r.dist()
        .iter()
        .zip(r.sigma())
        .enumerate()
        .filter(move |&(u, _)| u != source)
        .map(move |(_, (&d, &s))| {
            if d.is_finite() {
                Some((d, s))
            } else {
                match policy {
                    UnreachablePolicy::SubstituteN => Some((n as f64, 1.0)),
                    UnreachablePolicy::HarmonicZero => None,
                }
            }
        })
}

pub(crate) fn ensure_size(g: &Graph) -> Result<usize> {
    match g.n() {
        n if n < 2 => Err(Error::TooFewVertices(n)),
        n => Ok(n),
    }
}

fn all_vertices(g: &Graph) -> Vec<VertexId> {
    (0..g.n()).collect()
}

/// Sum (or maximum) of `f(d) * g(sigma)` over all other vertices, over `n - 1`.
fn generalized_scores<F, S>(g: &Graph, f: F, g_fn: S, policy: UnreachablePolicy, use_max: bool) -> Result<Vec<f64>>
where
    F: Fn(f64) -> f64 + Sync,
    S: Fn(f64) -> f64 + Sync,
{
    let n = ensure_size(g)?;
    let norm = (n - 1) as f64;
    sweep_sources(g, &all_vertices(g), |r| {
        let mut acc = 0.0f64;
        for (d, sigma) in pairs(r, policy).flatten() {
            let value = f(d) * g_fn(sigma);
            if !value.is_finite() {
                return Err(Error::NonFinite { dist: d, sigma, value });
            }
            acc = if use_max { acc.max(value) } else { acc + value };
        }
        Ok(acc / norm)
    })
    .into_iter()
    .collect()
}

/// One built-in index for every vertex, one shortest-path sweep per source.
pub fn compute_index(g: &Graph, kind: IndexKind, policy: UnreachablePolicy) -> Result<IndexVector> {
    let (f, g_fn) = kind
        .term()
        .ok_or_else(|| Error::InvalidArgument("use compute_generalized_closeness for generalized indices".into()))?;
    let scores = generalized_scores(g, f, g_fn, policy, kind.is_eccentricity())?;
    Ok(IndexVector {
        kind,
        scores,
        policy,
        normalized: true,
    })
}

/// `(1/(n-1)) * sum_u f(d(v,u)) * g_fn(sigma(v,u))` for every vertex `v`.
///
/// `(d, 1)` gives closeness, `(d, 1/sigma)` discriminative closeness,
/// `(1/d, 1)` harmonic closeness and `(1/d, sigma)` its discriminative form;
/// `(alpha^d, sigma)` gives a Katz index restricted to shortest paths.
pub fn compute_generalized_closeness<F, S>(g: &Graph, f: F, g_fn: S, policy: UnreachablePolicy) -> Result<IndexVector>
where
    F: Fn(f64) -> f64 + Sync,
    S: Fn(f64) -> f64 + Sync,
{
    Ok(IndexVector {
        kind: IndexKind::Generalized,
        scores: generalized_scores(g, f, g_fn, policy, false)?,
        policy,
        normalized: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphAggregates {
    pub apl: f64,
    pub adpl: f64,
    pub ae: f64,
    pub ade: f64,
    pub diameter: f64,
    pub discriminative_diameter: f64,
    pub radius: f64,
    pub discriminative_radius: f64,
}

impl GraphAggregates {
    /// `(name, value)` pairs in report order.
    pub fn fields(&self) -> [(&'static str, f64); 8] {
        [
            ("apl", self.apl),
            ("adpl", self.adpl),
            ("ae", self.ae),
            ("ade", self.ade),
            ("diameter", self.diameter),
            ("discriminative_diameter", self.discriminative_diameter),
            ("radius", self.radius),
            ("discriminative_radius", self.discriminative_radius),
        ]
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct SourceSummary {
    pub(crate) sum_d: f64,
    pub(crate) sum_dd: f64,
    pub(crate) max_d: f64,
    pub(crate) max_dd: f64,
}

pub(crate) fn summarize(r: &SsspResult, policy: UnreachablePolicy) -> SourceSummary {
    let mut s = SourceSummary::default();
    for (d, sigma) in pairs(r, policy).flatten() {
        // same term shape as the discriminative indices, so aggregates agree with them bit for bit
        let dd = d * (1.0 / sigma);
        s.sum_d += d;
        s.sum_dd += dd;
        s.max_d = s.max_d.max(d);
        s.max_dd = s.max_dd.max(dd);
    }
    s
}

pub fn compute_aggregates(g: &Graph, policy: UnreachablePolicy) -> Result<GraphAggregates> {
    let n = ensure_size(g)?;
    let norm = (n - 1) as f64;
    let summaries = sweep_sources(g, &all_vertices(g), |r| summarize(r, policy));
    let mean = |pick: fn(&SourceSummary) -> f64| summaries.iter().map(|s| pick(s) / norm).sum::<f64>() / n as f64;
    let max = |pick: fn(&SourceSummary) -> f64| summaries.iter().map(pick).fold(f64::NEG_INFINITY, f64::max);
    let min = |pick: fn(&SourceSummary) -> f64| summaries.iter().map(pick).fold(f64::INFINITY, f64::min);
    Ok(GraphAggregates {
        apl: mean(|s| s.sum_d),
        adpl: mean(|s| s.sum_dd),
        ae: mean(|s| s.max_d),
        ade: mean(|s| s.max_dd),
        diameter: max(|s| s.max_d),
        discriminative_diameter: max(|s| s.max_dd),
        radius: min(|s| s.max_d),
        discriminative_radius: min(|s| s.max_dd),
    })
}

/// Vertices of minimum and maximum (discriminative) eccentricity, each sorted by id.
pub fn center_periphery(
    g: &Graph,
    discriminative: bool,
    policy: UnreachablePolicy,
) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let kind = if discriminative {
        IndexKind::DiscriminativeEccentricity
    } else {
        IndexKind::Eccentricity
    };
    let scores = compute_index(g, kind, policy)?.scores;
    let lo = scores.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let select = |target: f64| (0..scores.len()).filter(|&v| scores[v] == target).collect();
    Ok((select(lo), select(hi)))
}

/// Percentage of distinct values among `scores` after rounding each to
/// `digits` significant decimal digits.
pub fn discriminability(scores: &[f64], digits: u32) -> f64 {
    if scores.is_empty() {
        return 0.0;
    }
    let precision = digits.max(1) as usize - 1;
    let distinct: HashSet<String> = scores
        .iter()
        .map(|&s| format!("{:.*e}", precision, if s == 0.0 { 0.0 } else { s }))
        .collect();
    100.0 * distinct.len() as f64 / scores.len() as f64
}
