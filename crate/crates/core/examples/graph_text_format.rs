//! Parses the text graph format and prints basic structure.
//!
//! `cargo run --example graph_text_format`

use loopgraph::{GraphBuilder, Pseudograph};

const TEXT: &str = "\
# triangle with a pendant vertex, loop on the pendant
p 4
e 0 1
e 1 2
e 0 2
e 2 3
l 3   # trailing comments are fine
";

fn main() -> Result<(), loopgraph::Error> {
    let g: Pseudograph = TEXT.parse()?;
    println!(
        "order {}, {} edges, {} loops",
        g.order(),
        g.edge_count(),
        g.loop_count()
    );
    for v in 0..g.order() {
        println!("  N({v}) = {}", g.open_neighborhood(v)?);
    }

    let same = GraphBuilder::new(4)
        .add_edge(0, 1)?
        .add_edge(1, 2)?
        .add_edge(0, 2)?
        .add_edge(2, 3)?
        .add_loop(3)?
        .build();
    assert_eq!(g, same);

    match "p 2\ne 0 1\ne 1 0\n".parse::<Pseudograph>() {
        Err(e) => println!("rejected duplicate edge: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
