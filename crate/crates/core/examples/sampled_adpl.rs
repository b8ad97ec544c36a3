//! Estimating ADPL from sampled sources, next to the exact value.
//!
//! `cargo run --release --example sampled_adpl`

use ddindex::sampling::log2_bound;
use ddindex::{estimate_adpl, estimate_exhaustive, required_sample_size, AverageKind, Graph, UnreachablePolicy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> ddindex::Result<()> {
    let n = 2000;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    // random recursive tree plus a few thousand shortcuts
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    edges.extend((0..3 * n).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))));
    let g = Graph::from_edges(n, &edges);
    let policy = UnreachablePolicy::SubstituteN;

    let exact = estimate_exhaustive(&g, AverageKind::Adpl, policy)?.estimate;
    println!("exact ADPL {exact:.5} ({n} sweeps)");

    let bound = log2_bound(n);
    for epsilon in [1.0, 0.5, 0.25] {
        let t = required_sample_size(epsilon, 0.05, bound)? as usize;
        let est = estimate_adpl(&g, t, 42, policy)?;
        println!(
            "eps {epsilon:<5} T {t:<5} estimate {:.5}  error {:.5}",
            est.estimate,
            (est.estimate - exact).abs()
        );
    }
    Ok(())
}
