//! The reciprocal zeta polynomial of a small hypergraph: one 3-edge whose
//! vertices are each joined to a hub by a 2-edge.
//!
//!     cargo run --example golden_polynomial

use hyperzeta::generate::hub;
use hyperzeta::zeta::{bipartite_reciprocal, zeta_via_bass, zeta_via_linegraph};
use hyperzeta::IntPoly;

fn main() -> hyperzeta::Result<()> {
    let h = hub();
    print!("{}", h.to_hg_string());

    let lg = zeta_via_linegraph(&h)?;
    println!("line graph:  {}", lg.reciprocal.pretty("u"));
    println!("bass:        {}", zeta_via_bass(&h)?.reciprocal.pretty("u"));
    println!("incidence graph, before t^2 = u: {}", bipartite_reciprocal(&h)?.pretty("t"));

    // (1 - u)(1 + u + u^2 - 5u^3 - 5u^4 - 5u^5 + 4u^6 + 4u^7 + 4u^8)
    let factored = &IntPoly::linear(1, -1) * &IntPoly::from_i64s(&[1, 1, 1, -5, -5, -5, 4, 4, 4]);
    println!("matches the factored form: {}", factored == lg.reciprocal);
    println!("coefficients: {}", lg.reciprocal.to_coeff_string());
    Ok(())
}
