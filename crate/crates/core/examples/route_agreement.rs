//! Three independent computations of the same polynomial, compared on random
//! hypergraphs and on regular ones where the factorization route applies.
//!
//!     cargo run --release --example route_agreement

use hyperzeta::generate::{random_hypergraph, regular_zoo};
use hyperzeta::zeta::cross_validate;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hyperzeta::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..10 {
        let h = random_hypergraph(&mut rng, 7, 4, Some(40));
        let cv = cross_validate(&h, 3)?;
        println!(
            "random {i}: |V| = {}, orders {:?}, degree {} = sum |e| {}, routes agree",
            h.n_vertices(),
            h.orders(),
            cv.degree,
            cv.total_order
        );
    }
    for (name, h) in regular_zoo() {
        let cv = cross_validate(&h, 2)?;
        println!("{name}: {} routes agree, degree {}", cv.routes.len(), cv.degree);
    }
    Ok(())
}
