//! Expands a characteristic polynomial over subsets of the loops, and peels
//! a single loop: φ(G) = φ(G - l) - φ(G - v).
//!
//! `cargo run --example loop_expansion`

use loopgraph::deletion;
use loopgraph::named::looped_diamond;
use loopgraph::oracle;

fn main() -> Result<(), loopgraph::Error> {
    let g = looped_diamond();
    let stripped = g.without_loops();
    println!("G  : {}", oracle::charpoly_of_graph(&g));
    println!("G' : {}", oracle::charpoly_of_graph(&stripped));
    println!(
        "subset expansion    : {}",
        deletion::charpoly_loop_expansion(&g)
    );
    for v in g.loop_set().iter() {
        println!(
            "peel loop at {v}      : {}",
            deletion::charpoly_single_loop_removal(&g, v)?
        );
    }
    println!(
        "(x-1) figure form   : {}",
        deletion::charpoly_basic_figure_form(&g)
    );
    for i in 0..=g.order() {
        println!("  a_{i} = {}", deletion::coefficient_via_subsets(&g, i)?);
    }
    Ok(())
}
