//! Lists basic figures by order and shape, and checks that their weights
//! sum to the coefficients.
//!
//! `cargo run --example basic_figures`

use num_bigint::BigInt;

use loopgraph::named::looped_diamond;
use loopgraph::sachs;

fn main() {
    let g = looped_diamond();
    let phi = sachs::charpoly_sachs(&g);
    let figures = sachs::enumerate_basic_figures(&g, None);
    for k in 1..=g.order() {
        let of_order: Vec<_> = figures.iter().filter(|b| b.order() == k).collect();
        let weight: BigInt = of_order.iter().map(|b| b.weight()).sum();
        println!("order {k}: {} figures, weight {weight}", of_order.len());
        for b in of_order {
            println!(
                "    edges {:?} cycles {:?} loops {:?}",
                b.edge_components,
                b.cycle_components
                    .iter()
                    .map(|c| c.vertices())
                    .collect::<Vec<_>>(),
                b.loop_components
            );
        }
        assert_eq!(weight, phi.coefficient_of(g.order() - k));
    }
    println!("φ = {phi}");
}
