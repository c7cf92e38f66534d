//! Collapsing the inner triangle of a prism. The collapsed hypergraph loses
//! exactly the cycles that take two steps in a row inside that triangle.
//!
//!     cargo run --example clique_collapse

use hyperzeta::distinguish::{collapse, ihara_zeta_graph};
use hyperzeta::generate::prism;
use hyperzeta::linegraph::line_graph_of;
use hyperzeta::zeta::reciprocal_zeta;

fn main() -> hyperzeta::Result<()> {
    let g = prism();
    let family = collapse(&g, &[vec![0, 1, 2]])?;
    print!("{}", family.result.to_hg_string());
    println!("graph zeta^-1:     {}", ihara_zeta_graph(&g)?.pretty("u"));
    println!("collapsed zeta^-1: {}", reciprocal_zeta(&family.result)?.pretty("u"));
    let before = line_graph_of(g.as_hypergraph()).enumerate_prime_cycles(6, 1_000_000)?;
    let after = line_graph_of(&family.result).enumerate_prime_cycles(6, 1_000_000)?;
    println!("prime cycles by length, graph:     {before:?}");
    println!("prime cycles by length, collapsed: {after:?}");
    Ok(())
}
