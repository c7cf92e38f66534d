//! Bipartite graphs have even zeta polynomials; an even polynomial implies
//! the hypergraph is unimodular.
//!
//!     cargo run --example evenness

use hyperzeta::generate::{hub, random_bipartite_graph};
use hyperzeta::zeta::evenness_report;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hyperzeta::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..5 {
        let g = random_bipartite_graph(&mut rng, 4);
        let e = evenness_report(g.as_hypergraph())?;
        println!("bipartite {i} ({} vertices, {} edges): {e:?}", g.n_vertices(), g.n_edges());
    }
    println!("hub: {:?}", evenness_report(&hub())?);
    Ok(())
}
