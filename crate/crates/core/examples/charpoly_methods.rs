//! Computes one characteristic polynomial five independent ways.
//!
//! `cargo run --example charpoly_methods`

use loopgraph::cli::Method;
use loopgraph::named::looped_path;

fn main() {
    let g = looped_path();
    println!("graph:\n{}", g.to_text());
    for m in Method::ALL {
        println!("{:<16} {}", m.name(), m.charpoly(&g, None));
    }
}
