//! Brute-force checks of the determinant against its defining series.
//!
//! The series of `1 / det(I - uT)` must equal both the Euler product over
//! enumerated prime cycles and `exp(sum_m tr(T^m) u^m / m)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::linegraph::line_graph_of;
use crate::poly::{euler_product_truncation, exp_weighted_counts, series_reciprocal, IntPoly, Rational};
use crate::zeta::{zeta_core, zeta_via_linegraph};

/// Default step budget for prime-cycle enumeration.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRow {
    pub length: usize,
    /// `N_m = tr(T^m)`.
    pub closed_paths: BigInt,
    pub prime_cycles: u64,
    pub series: Rational,
    pub euler: Rational,
    pub trace_exp: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub reciprocal: IntPoly,
    pub prime_counts: BTreeMap<usize, u64>,
    pub rows: Vec<OracleRow>,
    pub euler_agrees: bool,
    pub trace_agrees: bool,
}

impl OracleReport {
    pub fn all_agree(&self) -> bool {
        self.euler_agrees && self.trace_agrees
    }
}

/// Compares the three series through `u^order` on the pruned core of `h`.
pub fn oracle_report(h: &Hypergraph, order: usize, budget: u64) -> Result<OracleReport> {
    let reciprocal = zeta_via_linegraph(h)?.reciprocal;
    let (core, _) = zeta_core(h)?;
    let l = line_graph_of(&core);
    let counts = l.closed_path_counts(order);
    let prime_counts = l.enumerate_prime_cycles(order, budget)?;
    let series = series_reciprocal(&reciprocal, order)?;
    let euler = euler_product_truncation(&prime_counts, order);
    let trace = exp_weighted_counts(&counts);
    let rows = (1..=order)
        .map(|m| OracleRow {
            length: m,
            closed_paths: counts[m - 1].clone(),
            prime_cycles: prime_counts.get(&m).copied().unwrap_or(0),
            series: series.coeff(m).clone(),
            euler: euler.coeff(m).clone(),
            trace_exp: trace.coeff(m).clone(),
        })
        .collect();
    Ok(OracleReport {
        euler_agrees: series == euler,
        trace_agrees: series == trace,
        reciprocal,
        prime_counts,
        rows,
    })
}

/// Checks only the trace identity through `u^order`; no enumeration, so it
/// stays cheap on instances with many prime cycles.
pub fn trace_identity_holds(h: &Hypergraph, order: usize) -> Result<bool> {
    let reciprocal = zeta_via_linegraph(h)?.reciprocal;
    let (core, _) = zeta_core(h)?;
    let counts = line_graph_of(&core).closed_path_counts(order);
    Ok(series_reciprocal(&reciprocal, order)? == exp_weighted_counts(&counts))
}

/// `sum_{m <= order} tr(T^m)`, the number of closed paths an enumeration
/// to that order has to walk through.
pub fn closed_path_total(h: &Hypergraph, order: usize) -> Result<BigInt> {
    let (core, _) = zeta_core(h)?;
    Ok(line_graph_of(&core).closed_path_counts(order).into_iter().sum())
}
