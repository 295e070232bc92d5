//! Real eigenvalues with multiplicities from the exact polynomial.
//!
//! `cargo run --example real_roots`

use loopgraph::cayley;
use loopgraph::cli::roots::real_roots;
use loopgraph::oracle;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = cayley::build_unitary_cayley(10)?;
    let phi = oracle::charpoly_of_graph(&g);
    println!("φ(G_10) = {phi}");
    for r in real_roots(&phi, 1e-9)? {
        println!("  {:>8.4}  x{}", r.value, r.multiplicity);
    }
    Ok(())
}
