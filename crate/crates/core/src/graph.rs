//! Immutable undirected graph in compressed-sparse-row form.
//!
//! Every graph built here is simple: self-loops are dropped and parallel
//! edges collapse into one (keeping the minimum weight when weighted).
//! Adjacency lists are sorted by neighbor id, and each undirected edge is
//! stored once in each endpoint's list.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    weights: Option<Vec<f64>>,
    labels: Vec<String>,
}

impl Graph {
    /// Unweighted graph on `n` vertices labelled `"0"..n`.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
        let labels = (0..n).map(|v| v.to_string()).collect();
        let edges = edges.iter().map(|&(u, v)| (u, v, 1.0));
        Graph::build(labels, edges, false)
    }

    /// Weighted graph on `n` vertices labelled `"0"..n`. Weights must be positive and finite.
    pub fn from_weighted_edges(n: usize, edges: &[(VertexId, VertexId, f64)]) -> Result<Graph> {
        for &(_, _, w) in edges {
            if !(w > 0.0 && w.is_finite()) {
                return Err(Error::InvalidArgument(format!("edge weight {w} is not positive")));
            }
        }
        let labels = (0..n).map(|v| v.to_string()).collect();
        Ok(Graph::build(labels, edges.iter().copied(), true))
    }

    /// Builds a simplified graph. Endpoints must be `< labels.len()`.
    pub(crate) fn build(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (VertexId, VertexId, f64)>,
        weighted: bool,
    ) -> Graph {
        let n = labels.len();
        let mut list: Vec<(VertexId, VertexId, f64)> = edges
            .into_iter()
            .filter(|&(u, v, _)| u != v)
            .map(|(u, v, w)| {
                assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} vertices");
                (u.min(v), u.max(v), w)
            })
            .collect();
        list.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then(a.2.total_cmp(&b.2)));
        // sorted by weight within a pair, so the first survivor carries the minimum
        list.dedup_by(|next, kept| next.0 == kept.0 && next.1 == kept.1);

        let mut arcs: Vec<(VertexId, VertexId, f64)> = Vec::with_capacity(2 * list.len());
        for &(u, v, w) in &list {
            arcs.push((u, v, w));
            arcs.push((v, u, w));
        }
        arcs.sort_unstable_by_key(|&(u, v, _)| (u, v));

        let mut offsets = vec![0usize; n + 1];
        for &(u, _, _) in &arcs {
            offsets[u + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let neighbors = arcs.iter().map(|a| a.1).collect();
        let weights = weighted.then(|| arcs.iter().map(|a| a.2).collect());

        Graph {
            offsets,
            neighbors,
            weights,
            labels,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edge weights parallel to [`Graph::neighbors`], or `None` for unweighted graphs.
    pub fn neighbor_weights(&self, v: VertexId) -> Option<&[f64]> {
        self.weights.as_ref().map(|w| &w[self.offsets[v]..self.offsets[v + 1]])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Weight of edge `{u, v}`: 1.0 on unweighted graphs, `None` if absent.
    pub fn edge_weight(&self, u: VertexId, v: VertexId) -> Option<f64> {
        let i = self.neighbors(u).binary_search(&v).ok()?;
        Some(self.neighbor_weights(u).map_or(1.0, |w| w[i]))
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Each undirected edge once, as `(u, v, weight)` with `u < v`, in CSR order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, f64)> + '_ {
        (0..self.n()).flat_map(move |u| {
            let ws = self.neighbor_weights(u);
            self.neighbors(u)
                .iter()
                .enumerate()
                .filter(move |&(_, &v)| u < v)
                .map(move |(i, &v)| (u, v, ws.map_or(1.0, |w| w[i])))
        })
    }

    /// Component id for every vertex; ids are numbered in order of each
    /// component's smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        let mut next = 0;
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = next;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Induced subgraph on the largest connected component, relabeled densely
    /// in the original vertex order. Equal-size components are resolved in
    /// favour of the one holding the smallest vertex id.
    pub fn largest_connected_component(&self) -> Graph {
        let comp = self.components();
        let count = comp.iter().max().map_or(0, |c| c + 1);
        let mut sizes = vec![0usize; count];
        for &c in &comp {
            sizes[c] += 1;
        }
        // component ids already follow smallest-member order, so the first maximum wins
        let Some(best) = (0..count).max_by(|&a, &b| sizes[a].cmp(&sizes[b]).then(b.cmp(&a))) else {
            return self.clone();
        };
        let keep: Vec<VertexId> = (0..self.n()).filter(|&v| comp[v] == best).collect();
        self.induced_subgraph(&keep)
    }

    /// Induced subgraph on `vertices` (must be sorted and distinct).
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Graph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut remap = vec![usize::MAX; self.n()];
        for (new, &old) in vertices.iter().enumerate() {
            remap[old] = new;
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let edges = self
            .edges()
            .filter(|&(u, v, _)| remap[u] != usize::MAX && remap[v] != usize::MAX)
            .map(|(u, v, w)| (remap[u], remap[v], w))
            .collect::<Vec<_>>();
        Graph::build(labels, edges, self.is_weighted())
    }
}
