//! Load a SNAP/KONECT edge list, keep its largest component and summarize it.
//!
//! `cargo run --example load_edge_list -- path/to/edges.txt [--weighted]`

use std::process::ExitCode;

use ddindex::io::write_label_map;
use ddindex::{compute_aggregates, load_edge_list, UnreachablePolicy};

fn main() -> ExitCode {
    let mut args = std::env::args().skip(1);
    let Some(path) = args.next() else {
        eprintln!("usage: load_edge_list <edges.txt> [--weighted]");
        return ExitCode::FAILURE;
    };
    let weighted = args.any(|a| a == "--weighted");
    match run(&path, weighted) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(path: &str, weighted: bool) -> ddindex::Result<()> {
    let g = load_edge_list(path, weighted)?;
    println!("loaded n={} m={} components={}", g.n(), g.m(), g.component_count());

    let lcc = g.largest_connected_component();
    println!("largest component n={} m={}", lcc.n(), lcc.m());
    let agg = compute_aggregates(&lcc, UnreachablePolicy::SubstituteN)?;
    println!(
        "apl={:.5} adpl={:.5} dd={}",
        agg.apl, agg.adpl, agg.discriminative_diameter
    );

    if lcc.n() <= 20 {
        write_label_map(&lcc, std::io::stdout().lock()).expect("stdout");
    }
    Ok(())
}
