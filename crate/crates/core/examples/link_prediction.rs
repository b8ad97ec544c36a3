//! Temporal link prediction: LIDIN against -SPL and Adamic/Adar.
//!
//! Pass a `u v t` file to evaluate it, or run without arguments for a
//! synthetic network that grows by triadic closure.
//!
//! `cargo run --release --example link_prediction [-- edges.txt]`

use ddindex::linkpred::{EvaluateOptions, PROTOCOL_RATIOS};
use ddindex::{evaluate, load_temporal_edge_list, Method, TemporalEdgeList};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn synthetic(n: usize, steps: usize) -> TemporalEdgeList {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut list = TemporalEdgeList::default();
    let add = |adj: &mut Vec<Vec<usize>>, list: &mut TemporalEdgeList, u: usize, v: usize, t: usize| {
        if u != v && !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
            list.push(u.to_string(), v.to_string(), t as i64);
        }
    };
    for v in 1..n {
        let u = rng.gen_range(0..v);
        add(&mut adj, &mut list, u, v, 0);
    }
    for t in 1..=steps {
        let u = rng.gen_range(0..n);
        // mostly close a wedge, sometimes a random link
        let v = if rng.gen_bool(0.8) {
            let &w = adj[u].choose(&mut rng).unwrap();
            *adj[w].choose(&mut rng).unwrap()
        } else {
            rng.gen_range(0..n)
        };
        add(&mut adj, &mut list, u, v, t);
    }
    list
}

fn main() -> ddindex::Result<()> {
    let edges = match std::env::args().nth(1) {
        Some(path) => load_temporal_edge_list(path)?,
        None => synthetic(400, 1600),
    };
    let options = EvaluateOptions {
        draws: Some(5000),
        ..Default::default()
    };
    let report = evaluate(&edges, &PROTOCOL_RATIOS, &Method::ALL, &options)?;
    print!("{}", report.rounded().to_tsv());
    Ok(())
}
