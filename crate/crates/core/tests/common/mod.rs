//! Test-only reference implementations.
//!
//! Distances come from Floyd-Warshall and path counts from explicit
//! enumeration of every shortest path, so nothing here shares code with the
//! BFS/Dijkstra accumulation under test. Index values are evaluated directly
//! from their defining formulas.

#![allow(dead_code, clippy::needless_range_loop)]

use ddindex::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const UNREACHABLE: u64 = u64::MAX;

pub struct Oracle {
    pub n: usize,
    adj: Vec<Vec<usize>>,
    /// Hop distances, `UNREACHABLE` when disconnected.
    pub dist: Vec<Vec<u64>>,
    /// Shortest-path counts by enumeration; 0 on the diagonal.
    pub sigma: Vec<Vec<u64>>,
}

impl Oracle {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Oracle {
        let mut adj = vec![Vec::new(); n];
        let mut dist = vec![vec![UNREACHABLE; n]; n];
        for v in 0..n {
            dist[v][v] = 0;
        }
        for &(a, b) in edges {
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
                dist[a][b] = 1;
                dist[b][a] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if dist[i][k] != UNREACHABLE && dist[k][j] != UNREACHABLE {
                        let through = dist[i][k] + dist[k][j];
                        if through < dist[i][j] {
                            dist[i][j] = through;
                        }
                    }
                }
            }
        }
        let mut oracle = Oracle {
            n,
            adj,
            dist,
            sigma: vec![vec![0; n]; n],
        };
        for v in 0..n {
            for u in 0..n {
                if u != v && oracle.dist[v][u] != UNREACHABLE {
                    oracle.sigma[v][u] = oracle.shortest_paths(v, u).len() as u64;
                }
            }
        }
        oracle
    }

    /// Every shortest path from `v` to `u`, as vertex sequences.
    pub fn shortest_paths(&self, v: usize, u: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![v];
        self.extend(u, &mut path, &mut out);
        out
    }

    fn extend(&self, target: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let at = *path.last().unwrap();
        if at == target {
            out.push(path.clone());
            return;
        }
        for &next in &self.adj[at] {
            if self.dist[next][target] + 1 == self.dist[at][target] {
                path.push(next);
                self.extend(target, path, out);
                path.pop();
            }
        }
    }

    /// `(d, sigma)` of a pair, with unreachable pairs mapped to `(n, 1)`.
    fn substituted(&self, v: usize, u: usize) -> (f64, f64) {
        if self.dist[v][u] == UNREACHABLE {
            (self.n as f64, 1.0)
        } else {
            (self.dist[v][u] as f64, self.sigma[v][u] as f64)
        }
    }

    fn others(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| u != v)
    }

    fn norm(&self) -> f64 {
        (self.n - 1) as f64
    }

    pub fn closeness(&self, v: usize) -> f64 {
        self.others(v).map(|u| self.substituted(v, u).0).sum::<f64>() / self.norm()
    }

    pub fn discriminative_closeness(&self, v: usize) -> f64 {
        self.others(v)
            .map(|u| {
                let (d, s) = self.substituted(v, u);
                d / s
            })
            .sum::<f64>()
            / self.norm()
    }

    /// Harmonic forms skip unreachable pairs.
    pub fn harmonic_closeness(&self, v: usize) -> f64 {
        self.others(v)
            .filter(|&u| self.dist[v][u] != UNREACHABLE)
            .map(|u| 1.0 / self.dist[v][u] as f64)
            .sum::<f64>()
            / self.norm()
    }

    pub fn discriminative_harmonic_closeness(&self, v: usize) -> f64 {
        self.others(v)
            .filter(|&u| self.dist[v][u] != UNREACHABLE)
            .map(|u| self.sigma[v][u] as f64 / self.dist[v][u] as f64)
            .sum::<f64>()
            / self.norm()
    }

    pub fn max_distance(&self, v: usize) -> f64 {
        self.others(v).map(|u| self.substituted(v, u).0).fold(0.0, f64::max)
    }

    pub fn max_discriminative_distance(&self, v: usize) -> f64 {
        self.others(v)
            .map(|u| {
                let (d, s) = self.substituted(v, u);
                d / s
            })
            .fold(0.0, f64::max)
    }

    pub fn eccentricity(&self, v: usize) -> f64 {
        self.max_distance(v) / self.norm()
    }

    pub fn discriminative_eccentricity(&self, v: usize) -> f64 {
        self.max_discriminative_distance(v) / self.norm()
    }

    fn pairs_sum(&self, term: impl Fn(f64, f64) -> f64) -> f64 {
        let mut total = 0.0;
        for v in 0..self.n {
            for u in self.others(v) {
                let (d, s) = self.substituted(v, u);
                total += term(d, s);
            }
        }
        total / (self.n * (self.n - 1)) as f64
    }

    pub fn apl(&self) -> f64 {
        self.pairs_sum(|d, _| d)
    }

    pub fn adpl(&self) -> f64 {
        self.pairs_sum(|d, s| d / s)
    }

    pub fn ae(&self) -> f64 {
        (0..self.n).map(|v| self.max_distance(v)).sum::<f64>() / (self.n * (self.n - 1)) as f64
    }

    pub fn ade(&self) -> f64 {
        (0..self.n).map(|v| self.max_discriminative_distance(v)).sum::<f64>() / (self.n * (self.n - 1)) as f64
    }

    pub fn diameter(&self) -> f64 {
        (0..self.n).map(|v| self.max_distance(v)).fold(f64::MIN, f64::max)
    }

    pub fn radius(&self) -> f64 {
        (0..self.n).map(|v| self.max_distance(v)).fold(f64::MAX, f64::min)
    }

    pub fn discriminative_diameter(&self) -> f64 {
        (0..self.n)
            .map(|v| self.max_discriminative_distance(v))
            .fold(f64::MIN, f64::max)
    }

    pub fn discriminative_radius(&self) -> f64 {
        (0..self.n)
            .map(|v| self.max_discriminative_distance(v))
            .fold(f64::MAX, f64::min)
    }
}

/// Random connected graph: a random recursive tree plus every other pair
/// independently with probability `p`. No edge repeats.
pub fn random_connected_edges(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = random_tree_edges(rng, n);
    let tree: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) && !tree.contains(&(a, b)) {
                edges.push((a, b));
            }
        }
    }
    edges
}

pub fn random_tree_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

/// The `count` seeded oracle graphs: n in [5, 50], p in [0.1, 0.5].
pub fn oracle_graphs(count: usize, seed: u64) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(5..=50);
            let p = rng.gen_range(0.1..=0.5);
            (n, random_connected_edges(&mut rng, n, p))
        })
        .collect()
}

/// Source `s = 0`, target `t = n - 1`, and `(n - 2) / 2` columns of two
/// vertices with consecutive columns fully joined: `2^((n/2) - 1)` shortest paths.
pub fn ladder_gadget(n: usize) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2));
    let columns = (n - 2) / 2;
    let col = |c: usize| [1 + 2 * c, 2 + 2 * c];
    let mut edges = Vec::new();
    for v in col(0) {
        edges.push((0, v));
    }
    for c in 0..columns - 1 {
        for a in col(c) {
            for b in col(c + 1) {
                edges.push((a, b));
            }
        }
    }
    for v in col(columns - 1) {
        edges.push((v, n - 1));
    }
    Graph::from_edges(n, &edges)
}

pub fn c4() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
}

pub fn star3() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])
}

pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}
