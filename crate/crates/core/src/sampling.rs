//! Randomized estimation of the average discriminative path length (ADPL)
//! and average discriminative eccentricity (ADE).
//!
//! Each sample draws a source vertex uniformly at random with replacement,
//! runs one shortest-path sweep from it and records that source's
//! normalized contribution `beta_t`. The estimate is the mean of the
//! `beta_t`. Every `beta_t` lies in `(0, diameter]`, so Hoeffding's
//! inequality gives
//!
//! ```text
//! P(|ADPL - beta| > eps) <= 2 exp(-2 T (eps / bound)^2)
//! ```
//!
//! and [`required_sample_size`] inverts it for `T`.
//!
//! Sources are drawn sequentially from a seeded ChaCha stream before any
//! sweep runs; the sweeps then run in parallel and `beta_t` values are summed
//! in sample order, so results do not depend on the worker count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::indices::{ensure_size, summarize};
use crate::sssp::{shortest_path_dag, sweep_sources, SsspResult, UnreachablePolicy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AverageKind {
    /// Average discriminative path length.
    Adpl,
    /// Average discriminative eccentricity.
    Ade,
}

impl std::str::FromStr for AverageKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adpl" => Ok(AverageKind::Adpl),
            "ade" => Ok(AverageKind::Ade),
            _ => Err(Error::InvalidArgument(format!("unknown estimate kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateResult {
    pub kind: AverageKind,
    pub estimate: f64,
    pub samples_used: usize,
    /// `beta_t` in sample order.
    pub per_sample: Vec<f64>,
    /// `None` for the exhaustive sweep, which draws nothing.
    pub seed: Option<u64>,
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

fn contribution_of(r: &SsspResult, kind: AverageKind, policy: UnreachablePolicy) -> f64 {
    let norm = (r.dist().len() - 1) as f64;
    let s = summarize(r, policy);
    match kind {
        AverageKind::Adpl => s.sum_dd / norm,
        AverageKind::Ade => s.max_dd / norm,
    }
}

/// `beta` for source `v`: the mean (ADPL) or maximum (ADE) discriminative
/// distance from `v` to every other vertex, over `n - 1`.
pub fn per_source_contribution(g: &Graph, v: VertexId, kind: AverageKind, policy: UnreachablePolicy) -> Result<f64> {
    ensure_size(g)?;
    Ok(contribution_of(&shortest_path_dag(g, v), kind, policy))
}

fn finish(kind: AverageKind, per_sample: Vec<f64>, seed: Option<u64>) -> EstimateResult {
    let total: CompensatedSum = per_sample.iter().copied().collect();
    EstimateResult {
        kind,
        estimate: total.total() / per_sample.len() as f64,
        samples_used: per_sample.len(),
        per_sample,
        seed,
    }
}

/// Source vertices for `samples` independent uniform draws.
pub fn draw_sources(n: usize, samples: usize, seed: u64) -> Vec<VertexId> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|_| rng.gen_range(0..n)).collect()
}

/// Estimates ADPL or ADE from `samples` uniformly drawn sources.
pub fn estimate(
    g: &Graph,
    kind: AverageKind,
    samples: usize,
    seed: u64,
    policy: UnreachablePolicy,
) -> Result<EstimateResult> {
    let n = ensure_size(g)?;
    if samples == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1".into()));
    }
    let sources = draw_sources(n, samples, seed);
    let per_sample = sweep_sources(g, &sources, |r| contribution_of(r, kind, policy));
    Ok(finish(kind, per_sample, Some(seed)))
}

pub fn estimate_adpl(g: &Graph, samples: usize, seed: u64, policy: UnreachablePolicy) -> Result<EstimateResult> {
    estimate(g, AverageKind::Adpl, samples, seed, policy)
}

pub fn estimate_ade(g: &Graph, samples: usize, seed: u64, policy: UnreachablePolicy) -> Result<EstimateResult> {
    estimate(g, AverageKind::Ade, samples, seed, policy)
}

/// Sweeps every vertex exactly once: the exact ADPL / ADE.
pub fn estimate_exhaustive(g: &Graph, kind: AverageKind, policy: UnreachablePolicy) -> Result<EstimateResult> {
    let n = ensure_size(g)?;
    let sources: Vec<VertexId> = (0..n).collect();
    let per_sample = sweep_sources(g, &sources, |r| contribution_of(r, kind, policy));
    Ok(finish(kind, per_sample, None))
}

/// Smallest `T` with `2 exp(-2 T (epsilon / bound)^2) <= delta`, i.e.
/// `ceil(ln(2/delta) * bound^2 / (2 epsilon^2))`.
///
/// `bound` is any upper bound on the per-sample contribution: the
/// (discriminative) diameter when known, `log2 n` for small-world graphs, or
/// a small constant.
pub fn required_sample_size(epsilon: f64, delta: f64, bound: f64) -> Result<u64> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidArgument(format!("delta must lie in (0, 1), got {delta}")));
    }
    if !(bound > 0.0 && bound.is_finite()) {
        return Err(Error::InvalidArgument(format!("bound must be positive, got {bound}")));
    }
    let t = (2.0 / delta).ln() * bound * bound / (2.0 * epsilon * epsilon);
    Ok(t.ceil().max(1.0) as u64)
}

/// `log2 n`, the small-world diameter bound.
pub fn log2_bound(n: usize) -> f64 {
    (n.max(2) as f64).log2()
}
