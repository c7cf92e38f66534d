//! Ramanujan verdicts from exact eigenvalue counting, the matching Riemann
//! hypothesis verdict read off the zeta polynomial, and the pole audit.
//!
//!     cargo run --release --example ramanujan

use hyperzeta::generate::regular_zoo;
use hyperzeta::spectra::{default_tolerance, pole_audit, ramanujan_check, riemann_hypothesis_check};

fn main() -> hyperzeta::Result<()> {
    for (name, h) in regular_zoo() {
        let s = ramanujan_check(&h, &default_tolerance())?;
        let rh = riemann_hypothesis_check(&h)?;
        let poles = pole_audit(&h)?;
        let l2 = s
            .lambda2_bound_check
            .lambda2
            .as_ref()
            .map_or("-".to_string(), |iv| format!("{:.4}", hyperzeta::spectra::approx(iv)));
        println!(
            "{name:>15}: ({},{}) q = {} lambda2 ~ {l2} bound {} -> {}, RH {rh}, pole at 1 x{}, off-circle roots {}",
            s.d,
            s.r,
            s.q,
            s.alon_boppana,
            s.ramanujan,
            poles.mult_at_1,
            poles.off_circle().count()
        );
    }
    Ok(())
}
