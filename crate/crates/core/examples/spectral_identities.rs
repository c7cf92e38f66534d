//! Characteristic polynomial relations between a regular hypergraph, its
//! dual and its incidence graph.
//!
//!     cargo run --example spectral_identities

use hyperzeta::generate::regular_zoo;
use hyperzeta::poly::char_poly;
use hyperzeta::spectra::{bipartite_square_nonnegative, obvious_eigenvalues, verify_char_relations};

fn main() -> hyperzeta::Result<()> {
    for (name, h) in regular_zoo().into_iter().take(5) {
        let rel = verify_char_relations(&h)?;
        println!("{name}: P(x) = {}", char_poly(&h.adjacency_matrix())?.pretty("x"));
        println!(
            "  eq3 {} eq4 {} A(B)^2 nonnegative {} obvious {:?}",
            rel.eq3,
            rel.eq4,
            bipartite_square_nonnegative(&h)?,
            obvious_eigenvalues(&h)?
        );
    }
    Ok(())
}
