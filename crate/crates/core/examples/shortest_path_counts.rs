//! Shortest-path counts and discriminative distances on a ladder.
//!
//! Each column of two vertices doubles the number of shortest paths, so
//! a ladder on `n` vertices has `2^(n/2 - 1)` of them end to end.
//!
//! `cargo run --example shortest_path_counts`

use ddindex::{shortest_path_dag, Graph, UnreachablePolicy};

fn ladder(n: usize) -> Graph {
    let columns = (n - 2) / 2;
    let col = |c: usize| [1 + 2 * c, 2 + 2 * c];
    let mut edges: Vec<(usize, usize)> = col(0).iter().map(|&v| (0, v)).collect();
    for c in 0..columns - 1 {
        for a in col(c) {
            edges.extend(col(c + 1).iter().map(|&b| (a, b)));
        }
    }
    edges.extend(col(columns - 1).iter().map(|&v| (v, n - 1)));
    Graph::from_edges(n, &edges)
}

fn main() {
    println!("n\td\tsigma\tdd");
    for n in (4..=22).step_by(2) {
        let r = shortest_path_dag(&ladder(n), 0);
        let t = n - 1;
        let dd = r.discriminative_distance(t, UnreachablePolicy::SubstituteN).unwrap();
        println!("{n}\t{}\t{}\t{dd:.6}", r.dist()[t], r.sigma()[t]);
    }
}
