//! Anti-circulant graphs X(A_n): product formula against figure sums.
//!
//! `cargo run --example anticirculant`

use loopgraph::cayley;
use loopgraph::sachs;

fn main() -> Result<(), loopgraph::Error> {
    for n in 1..=12 {
        let g = cayley::build_anticirculant_graph(n)?;
        let closed = cayley::charpoly_anticirculant(n)?;
        let agree = closed == sachs::charpoly_sachs(&g);
        println!(
            "n={n:>2} loops {:?} agree {agree}: {closed}",
            g.loop_set().to_vec()
        );
    }
    Ok(())
}
