//! Seeded random sweep comparing all methods.
//!
//! `cargo run --release --example differential_sweep -- <seed> <count>`

use loopgraph::cli::{random_sweep, MethodReport};

fn main() {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let count: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(100);
    let mut disagreements = 0;
    for (i, g) in random_sweep(seed, count, 10).iter().enumerate() {
        let report = MethodReport::compute(g, &[]);
        if !report.agree {
            disagreements += 1;
            println!("instance {i}:\n{}{report}", g.to_text());
        }
    }
    println!("{count} graphs, seed {seed}, {disagreements} disagreement(s)");
}
