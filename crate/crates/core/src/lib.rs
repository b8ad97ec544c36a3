//! Discriminative distance-based network indices.
//!
//! The discriminative distance between two vertices is the shortest-path
//! length divided by the number of shortest paths, `dd(v,u) = d(v,u) / sigma(v,u)`.
//! Replacing `d` by `dd` in closeness, eccentricity and their graph averages
//! yields indices that separate vertices far better than the classic ones.
//!
//! * [`graph`] and [`io`]: simple undirected CSR graphs and edge-list files.
//! * [`sssp`]: distances and shortest-path counts from one source.
//! * [`indices`]: exact per-vertex indices, aggregates, center/periphery, discriminability.
//! * [`sampling`]: sampled ADPL/ADE estimators and the Hoeffding sample size.
//! * [`linkpred`]: LIDIN link prediction against -SPL and Adamic/Adar, with AUC and ranking error.
//! * [`cli`]: the `ddindex` command line.
//!
//! Runnable walkthroughs live in `examples/`.

pub mod cli;
pub mod error;
pub mod format;
pub mod graph;
pub mod indices;
pub mod io;
pub mod linkpred;
pub mod sampling;
pub mod sssp;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use indices::{
    center_periphery, compute_aggregates, compute_generalized_closeness, compute_index, discriminability,
    GraphAggregates, IndexKind, IndexVector,
};
pub use io::{load_edge_list, load_temporal_edge_list, TemporalEdge, TemporalEdgeList};
pub use linkpred::{
    auc, evaluate, ranking_error, score_pairs, temporal_split, Method, ScoredPairList, SplitSpec, TrainTestSplit,
};
pub use sampling::{
    estimate_ade, estimate_adpl, estimate_exhaustive, required_sample_size, AverageKind, EstimateResult,
};
pub use sssp::{shortest_path_dag, SsspResult, UnreachablePolicy};
