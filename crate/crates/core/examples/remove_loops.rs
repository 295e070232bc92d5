//! Recovers the loopless graph's polynomial from the looped one by removing
//! loops one at a time.
//!
//! `cargo run --example remove_loops`

use loopgraph::deletion;
use loopgraph::named::looped_path;
use loopgraph::oracle;

fn main() -> Result<(), loopgraph::Error> {
    let g = looped_path();
    let loops = g.loop_set().to_vec();
    println!("φ(G)             = {}", oracle::charpoly_of_graph(&g));
    println!(
        "loops removed    = {}",
        deletion::charpoly_loops_removed(&g, &loops)?
    );
    println!(
        "φ(G') by oracle  = {}",
        oracle::charpoly_of_graph(&g.without_loops())
    );
    Ok(())
}
