//! The determinant against brute force: prime cycles enumerated one by one,
//! closed paths counted through powers of the edge matrix.
//!
//!     cargo run --example prime_cycle_oracle

use hyperzeta::generate::{bowtie, hub};
use hyperzeta::oracle::{oracle_report, DEFAULT_BUDGET};

fn main() -> hyperzeta::Result<()> {
    for (name, h) in [("hub", hub()), ("bowtie", bowtie())] {
        let r = oracle_report(&h, 10, DEFAULT_BUDGET)?;
        println!("{name}: zeta^-1 = {}", r.reciprocal.pretty("u"));
        println!("{:>3} {:>6} {:>7} {:>8}", "m", "N_m", "primes", "coeff");
        for row in &r.rows {
            println!("{:>3} {:>6} {:>7} {:>8}", row.length, row.closed_paths, row.prime_cycles, row.series);
        }
        println!("euler product agrees: {}, trace formula agrees: {}\n", r.euler_agrees, r.trace_agrees);
    }
    Ok(())
}
