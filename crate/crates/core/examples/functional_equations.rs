//! The four completed zeta functions of a regular hypergraph are invariant
//! under u -> 1/(qu). Checked exactly at rational points.
//!
//!     cargo run --example functional_equations

use hyperzeta::generate::{complete_graph, fano};
use hyperzeta::zeta::{functional_equation_check, FunctionalEquationForm};
use hyperzeta::Rational;
use num_bigint::BigInt;

fn main() -> hyperzeta::Result<()> {
    let k4 = complete_graph(4).as_hypergraph().clone();
    let points = [(1, 3), (-2, 5), (3, 7), (5, 11)];
    for form in FunctionalEquationForm::ALL {
        for (n, d) in points {
            let u = Rational::new(BigInt::from(n), BigInt::from(d));
            println!("K4 {form:?} at u = {u}: {}", functional_equation_check(&k4, form, &u)?);
        }
    }
    // q = 4 for the Fano plane; u = 1/2 is the fixed point of u -> 1/(4u)
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    for form in FunctionalEquationForm::ALL {
        println!("Fano {form:?} at u = 1/2: {}", functional_equation_check(&fano(), form, &half)?);
    }
    Ok(())
}
