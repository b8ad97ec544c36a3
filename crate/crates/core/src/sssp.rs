//! Single-source shortest-path DAG: distances and shortest-path counts.
//!
//! Unweighted graphs use breadth-first search, weighted graphs Dijkstra.
//! Path counts are accumulated as `f64`; they are exact up to 2^53 and
//! approximate beyond that, which only matters inside the `d / sigma` ratio.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};

/// Two weighted path lengths closer than this are treated as equal.
pub const WEIGHT_TIE_TOLERANCE: f64 = 1e-12;

/// How a pair with no connecting path contributes to an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnreachablePolicy {
    /// Treat the pair as `d = n`, `sigma = 1`.
    SubstituteN,
    /// The pair contributes nothing (the harmonic `0 / inf = 0` convention).
    HarmonicZero,
}

/// Result of one shortest-path sweep. Owns its buffers, so a single value can
/// be recomputed for many sources without reallocating.
#[derive(Debug, Clone)]
pub struct SsspResult {
    source: VertexId,
    dist: Vec<f64>,
    sigma: Vec<f64>,
    queue: Vec<VertexId>,
    heap: BinaryHeap<HeapEntry>,
}

impl SsspResult {
    pub fn new(n: usize) -> Self {
        SsspResult {
            source: 0,
            dist: vec![f64::INFINITY; n],
            sigma: vec![0.0; n],
            queue: Vec::with_capacity(n),
            heap: BinaryHeap::new(),
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    /// Distances from the source; `f64::INFINITY` where unreachable.
    pub fn dist(&self) -> &[f64] {
        &self.dist
    }

    /// Shortest-path counts; 0 at the source and at unreachable vertices.
    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    pub fn is_reachable(&self, u: VertexId) -> bool {
        self.dist[u].is_finite()
    }

    pub fn reachable(&self) -> Vec<bool> {
        self.dist.iter().map(|d| d.is_finite()).collect()
    }

    /// Reruns the sweep from `source`, reusing this value's buffers.
    pub fn recompute(&mut self, g: &Graph, source: VertexId) {
        let n = g.n();
        assert!(source < n, "source {source} out of range for {n} vertices");
        self.source = source;
        self.dist.clear();
        self.dist.resize(n, f64::INFINITY);
        self.sigma.clear();
        self.sigma.resize(n, 0.0);
        self.dist[source] = 0.0;
        self.sigma[source] = 1.0;
        if g.is_weighted() {
            self.dijkstra(g);
        } else {
            self.bfs(g);
        }
        self.sigma[source] = 0.0;
    }

    fn bfs(&mut self, g: &Graph) {
        // integer levels compared exactly; f64 holds them without rounding
        let queue = &mut self.queue;
        queue.clear();
        queue.push(self.source);
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            let next = self.dist[a] + 1.0;
            let through = self.sigma[a];
            for &b in g.neighbors(a) {
                if self.dist[b] == f64::INFINITY {
                    self.dist[b] = next;
                    self.sigma[b] = through;
                    queue.push(b);
                } else if self.dist[b] == next {
                    self.sigma[b] += through;
                }
            }
        }
    }

    fn dijkstra(&mut self, g: &Graph) {
        let n = g.n();
        let settled = &mut self.queue;
        settled.clear();
        settled.resize(n, 0);
        self.heap.clear();
        self.heap.push(HeapEntry {
            dist: 0.0,
            vertex: self.source,
        });
        while let Some(HeapEntry { dist, vertex: a }) = self.heap.pop() {
            if settled[a] == 1 || dist > self.dist[a] {
                continue;
            }
            settled[a] = 1;
            let through = self.sigma[a];
            let weights = g.neighbor_weights(a).expect("weighted graph");
            for (&b, &w) in g.neighbors(a).iter().zip(weights) {
                if settled[b] == 1 {
                    continue;
                }
                let candidate = self.dist[a] + w;
                if candidate < self.dist[b] - WEIGHT_TIE_TOLERANCE {
                    self.dist[b] = candidate;
                    self.sigma[b] = through;
                    self.heap.push(HeapEntry {
                        dist: candidate,
                        vertex: b,
                    });
                } else if (candidate - self.dist[b]).abs() <= WEIGHT_TIE_TOLERANCE {
                    self.sigma[b] += through;
                }
            }
        }
    }

    /// `dd(source, u)` under `policy`, or `None` for the source itself.
    pub fn discriminative_distance(&self, u: VertexId, policy: UnreachablePolicy) -> Option<f64> {
        if u == self.source {
            return None;
        }
        let n = self.dist.len();
        Some(if self.is_reachable(u) {
            discriminative_distance(self.dist[u], self.sigma[u])
        } else {
            unreachable_discriminative_distance(n, policy)
        })
    }
}

/// Runs one sweep per source in parallel and maps each result through `f`.
/// Output order follows `sources`, independent of the worker count.
pub fn sweep_sources<T, F>(g: &Graph, sources: &[VertexId], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&SsspResult) -> T + Sync,
{
    sources
        .par_iter()
        .map_init(
            || SsspResult::new(g.n()),
            |scratch, &s| {
                scratch.recompute(g, s);
                f(scratch)
            },
        )
        .collect()
}

/// Shortest-path distances and counts from `source`.
pub fn shortest_path_dag(g: &Graph, source: VertexId) -> SsspResult {
    let mut result = SsspResult::new(g.n());
    result.recompute(g, source);
    result
}

/// `d / sigma` for a reachable pair of distinct vertices.
pub fn discriminative_distance(d: f64, sigma: f64) -> f64 {
    assert!(d > 0.0, "discriminative distance is undefined for the self-pair");
    d / sigma
}

/// Discriminative distance assigned to a pair with no connecting path.
pub fn unreachable_discriminative_distance(n: usize, policy: UnreachablePolicy) -> f64 {
    match policy {
        UnreachablePolicy::SubstituteN => n as f64 / 1.0,
        UnreachablePolicy::HarmonicZero => 0.0,
    }
}

#[derive(Debug, Clone, Copy)]
struct HeapEntry {
    dist: f64,
    vertex: VertexId,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapEntry {}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapEntry {
    // reversed: BinaryHeap is a max-heap
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}
