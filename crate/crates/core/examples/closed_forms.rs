//! Closed-form contributions of three figure shapes next to direct counts.
//!
//! `cargo run --example closed_forms`

use loopgraph::named::looped_diamond;
use loopgraph::sachs::{self, FigureShape};

fn main() -> Result<(), loopgraph::Error> {
    let g = looped_diamond();
    let census = sachs::figure_census(&g, None);
    let count = |k: usize, shape: FigureShape| {
        census
            .get(&k)
            .and_then(|m| m.get(&shape))
            .copied()
            .unwrap_or(0)
    };
    for k in 1..=g.order() {
        println!(
            "k={k}: all loops {} (count {})",
            sachs::contribution_all_loops(g.loop_count(), k),
            count(
                k,
                FigureShape {
                    edges: 0,
                    loops: k,
                    cycle_lengths: vec![]
                }
            )
        );
        if k >= 3 {
            println!(
                "     loops + edge {} (count {})",
                sachs::contribution_loops_plus_edge(&g, k)?,
                count(
                    k,
                    FigureShape {
                        edges: 1,
                        loops: k - 2,
                        cycle_lengths: vec![]
                    }
                )
            );
        }
        for n in 3..=k {
            println!(
                "     loops + {n}-cycle {} (count {})",
                sachs::contribution_loops_plus_cycle(&g, k, n)?,
                count(
                    k,
                    FigureShape {
                        edges: 0,
                        loops: k - n,
                        cycle_lengths: vec![n]
                    }
                )
            );
        }
    }
    Ok(())
}
