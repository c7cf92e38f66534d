//! Generalized Ihara-Selberg zeta functions of finite hypergraphs.
//!
//! The reciprocal `zeta_H(u)^-1` is an integer polynomial. This crate computes
//! it three independent ways (the oriented line graph determinant, Bass's
//! formula on the incidence graph, and the regular-case factorization), checks
//! the routes against each other and against brute-force prime-cycle counts,
//! and builds spectral and graph-distinguishing tools on top.

pub mod cli;
pub mod distinguish;
pub mod error;
pub mod generate;
pub mod hypergraph;
pub mod linegraph;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod spectra;
pub mod zeta;

pub use error::{Error, Result};
pub use hypergraph::{parse_hypergraph, BipartiteGraph, Hypergraph, ValidationReport};
pub use matrix::IntMatrix;
pub use poly::{IntPoly, RatSeries, Rational};
