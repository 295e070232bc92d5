//! Vertex-deletion recursion along several vertex orders.
//!
//! `cargo run --example vertex_deletion`

use loopgraph::deletion::{self, CharpolyEngine, LeafMethod};
use loopgraph::named::looped_diamond;

fn main() -> Result<(), loopgraph::Error> {
    let g = looped_diamond();
    let engine = CharpolyEngine::new(LeafMethod::Sachs);
    for order in [vec![0], vec![3, 1], vec![2, 0, 3, 1]] {
        let p = deletion::charpoly_vertex_deletion_with(&g, &order, &engine)?;
        println!("along {order:?}: {p}");
    }
    println!(
        "single vertex 0: {}",
        deletion::charpoly_single_vertex(&g, 0)?
    );
    println!("{} subgraph polynomials cached", engine.cached_entries());
    Ok(())
}
