//! Unitary addition Cayley graphs: closed-form polynomials and unit sums.
//!
//! `cargo run --example cayley_spectra -- 12`

use loopgraph::cayley;
use loopgraph::deletion::{CharpolyEngine, LeafMethod};
use loopgraph::oracle;

fn main() -> Result<(), loopgraph::Error> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    let engine = CharpolyEngine::new(LeafMethod::Oracle);
    let g = cayley::build_unitary_cayley(n)?;
    let closed = cayley::charpoly_cayley(n, &engine)?;
    println!("G_{n}: {closed}");
    println!(
        "matrix oracle agrees: {}",
        closed == oracle::charpoly_of_graph(&g)
    );
    for r in 0..=n / 2 {
        println!(
            "  λ_{r} = {:>4}   numeric {:.3}",
            cayley::lambda_r(n, r)?,
            cayley::lambda_r_numeric(n, r)?
        );
    }
    let report = cayley::spectrum_report(n)?;
    if let Some(ev) = report.cayley_eigenvalues() {
        println!("spectrum of G_{n}: {ev:?}");
    }
    Ok(())
}
