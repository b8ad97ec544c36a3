//! Closeness vs. discriminative closeness on a sparse random graph.
//!
//! `cargo run --example discriminative_closeness`

use ddindex::{compute_index, Graph, IndexKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> ddindex::Result<()> {
    let n = 60;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    edges.extend((0..40).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))));
    let g = Graph::from_edges(n, &edges);

    let kinds = IndexKind::BUILTIN;
    let vectors: Vec<_> = kinds
        .iter()
        .map(|&k| compute_index(&g, k, k.default_policy()))
        .collect::<Result<_, _>>()?;

    println!("vertex\t{}", kinds.map(|k| k.short_name()).join("\t"));
    for v in 0..10 {
        let row: Vec<String> = vectors.iter().map(|x| format!("{:.4}", x.scores[v])).collect();
        println!("{}\t{}", g.label(v), row.join("\t"));
    }
    println!("...");
    for (k, vec) in kinds.iter().zip(&vectors) {
        println!("discriminability {:>3}: {:.1}%", k.short_name(), vec.discriminability());
    }
    Ok(())
}
