//! Adjacency determinant from basic figures, from Bareiss elimination, and
//! from the constant term.
//!
//! `cargo run --example determinant`

use loopgraph::deletion;
use loopgraph::named::{looped_diamond, looped_path};
use loopgraph::oracle;

fn main() {
    for (name, g) in [
        ("looped path", looped_path()),
        ("looped diamond", looped_diamond()),
    ] {
        let a = oracle::adjacency_matrix(&g);
        println!("{name}: A = {:?}", a.to_rows_i64());
        println!("  figures   {}", deletion::determinant_adjacency(&g));
        println!("  Bareiss   {}", oracle::determinant_of_graph(&g));
        println!(
            "  φ(0)      {}",
            oracle::charpoly_of_graph(&g).coefficient_of(0)
        );
    }
}
