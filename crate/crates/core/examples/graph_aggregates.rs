//! Graph-level averages plus center and periphery.
//!
//! `cargo run --example graph_aggregates`

use ddindex::{center_periphery, compute_aggregates, Graph, UnreachablePolicy};

fn main() -> ddindex::Result<()> {
    // 3x4 grid
    let (rows, cols) = (3, 4);
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let g = Graph::from_edges(rows * cols, &edges);
    let policy = UnreachablePolicy::SubstituteN;

    for (name, value) in compute_aggregates(&g, policy)?.fields() {
        println!("{name:<24}{value:.6}");
    }
    for discriminative in [false, true] {
        let (center, periphery) = center_periphery(&g, discriminative, policy)?;
        let tag = if discriminative { "discriminative" } else { "classic" };
        println!("{tag}: center {center:?}, periphery {periphery:?}");
    }
    Ok(())
}
