//! User-supplied `f(d) * g(sigma)` closeness, e.g. Katz restricted to shortest paths.
//!
//! `cargo run --example generalized_closeness`

use ddindex::indices::compute_generalized_closeness;
use ddindex::{Graph, UnreachablePolicy};

fn main() -> ddindex::Result<()> {
    let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (1, 2)]);
    let policy = UnreachablePolicy::HarmonicZero;

    let alpha: f64 = 0.1;
    let katz = compute_generalized_closeness(&g, |d| alpha.powf(d), |s| s, policy)?;
    let gaussian = compute_generalized_closeness(&g, |d| (-d * d / 2.0).exp(), |s| s.sqrt(), policy)?;

    println!("vertex\tkatz\tgaussian");
    for v in 0..g.n() {
        println!("{v}\t{:.6}\t{:.6}", katz.scores[v], gaussian.scores[v]);
    }
    Ok(())
}
