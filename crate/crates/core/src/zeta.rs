//! The reciprocal zeta polynomial `zeta_H(u)^-1` by three independent routes,
//! their cross-validation, the functional equations of the regular case, and
//! the evenness test.
//!
//! * line graph: `det(I - uT)` with `T` the Perron-Frobenius operator;
//! * Bass: `Z_B(t)^-1 = (1 - t^2)^(-chi) det(I - tA_B + t^2 Q_B)` on the
//!   incidence graph, then `t^2 -> u`;
//! * Hashimoto (regular only): two factorizations through `A` and `A*`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::linegraph::{clique_expand, oriented_line_graph, Orientation};
use crate::matrix::IntMatrix;
use crate::poly::{det_pencil, IntPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    LineGraph,
    Bass,
    Hashimoto1,
    Hashimoto2,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::LineGraph => "linegraph",
            Route::Bass => "bass",
            Route::Hashimoto1 => "hashimoto1",
            Route::Hashimoto2 => "hashimoto2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// Degree-1 vertices of the incidence graph were pruned first.
    Pruned {
        vertices_removed: usize,
        hyperedges_removed: usize,
    },
    /// The oriented line graph has more than one strongly connected component;
    /// the determinant is still the formal Euler product.
    LineGraphNotStronglyConnected { components: usize },
    /// `d < r`, so the factorization ran on the dual.
    Dualized,
    /// The hypergraph failed validation; the value is the formal determinant.
    Unvalidated(String),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::Pruned {
                vertices_removed,
                hyperedges_removed,
            } => write!(
                f,
                "pruned {vertices_removed} vertices and {hyperedges_removed} hyperedges of degree 1 in the incidence graph"
            ),
            Warning::LineGraphNotStronglyConnected { components } => write!(
                f,
                "line graph not strongly connected ({components} components)"
            ),
            Warning::Dualized => write!(f, "d < r: factorization computed on the dual"),
            Warning::Unvalidated(why) => write!(f, "formal value only: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaResult {
    /// `zeta_H(u)^-1`.
    pub reciprocal: IntPoly,
    pub route: Route,
    pub warnings: Vec<Warning>,
}

/// Prunes degree-1 incidence vertices and checks the zeta hypotheses on what
/// remains.
pub fn zeta_core(h: &Hypergraph) -> Result<(Hypergraph, Vec<Warning>)> {
    let core = h.prune_leaves();
    let mut warnings = Vec::new();
    if core.n_vertices() != h.n_vertices() || core.n_hyperedges() != h.n_hyperedges() {
        warnings.push(Warning::Pruned {
            vertices_removed: h.n_vertices() - core.n_vertices(),
            hyperedges_removed: h.n_hyperedges() - core.n_hyperedges(),
        });
    }
    if !h.validate().connected {
        return Err(Error::Validation("bipartite graph is not connected".into()));
    }
    let report = core.validate();
    if core.n_vertices() == 0 {
        return Err(Error::Validation(
            "nothing is left after pruning degree-1 vertices (no cycles)".into(),
        ));
    }
    if !report.zeta_ready() {
        return Err(Error::Validation(report.failures().join("; ")));
    }
    Ok((core, warnings))
}

/// `det(I - uT)` for the given orientation, with no validation.
pub fn linegraph_determinant(h: &Hypergraph, orientation: Orientation) -> Result<IntPoly> {
    let l = oriented_line_graph(&clique_expand(h, orientation));
    let t = l.perron_frobenius_matrix();
    let n = t.rows();
    det_pencil(&IntMatrix::identity(n), &-&t, &IntMatrix::zeros(n, n))
}

fn strong_connectivity_warning(h: &Hypergraph) -> Option<Warning> {
    let l = oriented_line_graph(&clique_expand(h, Orientation::Canonical));
    let components = l.strongly_connected_components().len();
    (components != 1).then_some(Warning::LineGraphNotStronglyConnected { components })
}

pub fn zeta_via_linegraph(h: &Hypergraph) -> Result<ZetaResult> {
    let (core, mut warnings) = zeta_core(h)?;
    warnings.extend(strong_connectivity_warning(&core));
    Ok(ZetaResult {
        reciprocal: linegraph_determinant(&core, Orientation::Canonical)?,
        route: Route::LineGraph,
        warnings,
    })
}

/// `(1 - x^2)^(-chi) det(I - xA + x^2 Q)` for a graph given by its adjacency
/// matrix and Euler number; negative exponents are divided out exactly.
pub fn bass_formula(adjacency: &IntMatrix, q: &IntMatrix, chi: i64) -> Result<IntPoly> {
    let n = adjacency.rows();
    let det = det_pencil(&IntMatrix::identity(n), &-adjacency, q)?;
    det.mul_power(&IntPoly::from_i64s(&[1, 0, -1]), -chi)
}

/// `Z_B(t)^-1` of the incidence graph, before substituting `t^2 = u`.
pub fn bipartite_reciprocal(h: &Hypergraph) -> Result<IntPoly> {
    let b = h.bipartite();
    bass_formula(&b.adjacency_matrix(), &b.q_matrix(), h.euler_chi_bipartite())
}

pub fn zeta_via_bass(h: &Hypergraph) -> Result<ZetaResult> {
    let (core, warnings) = zeta_core(h)?;
    let bip = bipartite_reciprocal(&core)?;
    let reciprocal = bip.substitute_even().map_err(|e| {
        Error::Inconsistent(format!("incidence-graph zeta is not even ({e}): {bip}"))
    })?;
    Ok(ZetaResult {
        reciprocal,
        route: Route::Bass,
        warnings,
    })
}

/// The data of the regular factorization, oriented so that `d >= r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularData {
    /// `h` itself, or its dual when the input had `d < r`.
    pub hypergraph: Hypergraph,
    pub dualized: bool,
    pub d: usize,
    pub r: usize,
    pub n1: usize,
    pub n2: usize,
    pub q: i64,
    /// `-chi(B_H) = n1 (d - 1) - n2`.
    pub neg_chi: i64,
}

impl RegularData {
    pub fn new(h: &Hypergraph) -> Result<Self> {
        let (d0, r0) = h.regularity().ok_or(Error::NotRegular)?;
        if !h.validate().connected {
            return Err(Error::Disconnected);
        }
        if d0 < 2 || r0 < 2 {
            return Err(Error::Validation(format!(
                "({d0},{r0})-regular: both d and r must be at least 2"
            )));
        }
        let (hypergraph, dualized) = if d0 < r0 { (h.dual(), true) } else { (h.clone(), false) };
        let (d, r) = if dualized { (r0, d0) } else { (d0, r0) };
        let n1 = hypergraph.n_vertices();
        let n2 = hypergraph.n_hyperedges();
        let neg_chi = (n1 * (d - 1)) as i64 - n2 as i64;
        if neg_chi != -hypergraph.euler_chi_bipartite() || neg_chi < 0 || n2 < n1 {
            return Err(Error::Inconsistent(format!(
                "exponent bookkeeping failed: -chi = {neg_chi}, n1 = {n1}, n2 = {n2}"
            )));
        }
        Ok(RegularData {
            hypergraph,
            dualized,
            d,
            r,
            n1,
            n2,
            q: ((d - 1) * (r - 1)) as i64,
            neg_chi,
        })
    }

    /// `det[I_{n1} - (A - r + 2)u + q u^2]`.
    pub fn vertex_det_part(&self) -> Result<IntPoly> {
        let a = self.hypergraph.adjacency_matrix();
        self.det_part(&a, self.r)
    }

    /// `det[I_{n2} - (A* - d + 2)u + q u^2]`.
    pub fn edge_det_part(&self) -> Result<IntPoly> {
        let a = self.hypergraph.dual().adjacency_matrix();
        self.det_part(&a, self.d)
    }

    fn det_part(&self, a: &IntMatrix, shift: usize) -> Result<IntPoly> {
        let n = a.rows();
        let shifted = a - &IntMatrix::identity(n).scale(&BigInt::from(shift as i64 - 2));
        det_pencil(
            &IntMatrix::identity(n),
            &-&shifted,
            &IntMatrix::identity(n).scale(&BigInt::from(self.q)),
        )
    }

    /// `1 - u`.
    pub fn one_minus_u() -> IntPoly {
        IntPoly::linear(1, -1)
    }

    /// `1 + (r - 1) u`.
    pub fn vertex_linear(&self) -> IntPoly {
        IntPoly::linear(1, self.r as i64 - 1)
    }

    /// `1 + (d - 1) u`.
    pub fn edge_linear(&self) -> IntPoly {
        IntPoly::linear(1, self.d as i64 - 1)
    }
}

/// Both regular factorizations. Inputs with `d < r` are dualized first.
pub fn zeta_via_hashimoto(h: &Hypergraph) -> Result<(ZetaResult, ZetaResult)> {
    let data = RegularData::new(h)?;
    let warnings: Vec<Warning> = if data.dualized { vec![Warning::Dualized] } else { Vec::new() };
    let diff = data.n2 as i64 - data.n1 as i64;
    let base = RegularData::one_minus_u().pow(data.neg_chi as u32);
    let form1 = (&base * &data.vertex_linear().pow(diff as u32)) * data.vertex_det_part()?;
    // (1 + (d-1)u)^(n1 - n2) has a non-positive exponent; divide exactly.
    let form2 = (&base * &data.edge_det_part()?)
        .mul_power(&data.edge_linear(), -diff)
        .map_err(|e| Error::Inconsistent(format!("second factorization: {e}")))?;
    Ok((
        ZetaResult {
            reciprocal: form1,
            route: Route::Hashimoto1,
            warnings: warnings.clone(),
        },
        ZetaResult {
            reciprocal: form2,
            route: Route::Hashimoto2,
            warnings,
        },
    ))
}

/// Outcome of [`cross_validate`] when every route agrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub reciprocal: IntPoly,
    pub bipartite_reciprocal: IntPoly,
    pub routes: Vec<ZetaResult>,
    pub degree: usize,
    pub total_order: usize,
    /// `deg zeta^-1 = sum |e|` on the pruned core.
    pub degree_law_holds: bool,
    /// Odd degree: no graph has this zeta function.
    pub not_a_graph_zeta: bool,
    pub dual_agrees: bool,
    pub seeds_checked: u64,
    pub warnings: Vec<Warning>,
}

/// Side-by-side coefficient listing used in mismatch errors.
pub fn coefficient_diff(label_a: &str, a: &IntPoly, label_b: &str, b: &IntPoly) -> String {
    let n = a.coeffs().len().max(b.coeffs().len());
    let mut out = format!("{label_a}: {a}\n{label_b}: {b}\n");
    for i in 0..n {
        let (x, y) = (a.coeff(i), b.coeff(i));
        if x != y {
            out.push_str(&format!("  u^{i}: {x} vs {y}\n"));
        }
    }
    out
}

fn require_equal(label_a: &str, a: &IntPoly, label_b: &str, b: &IntPoly) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Mismatch(coefficient_diff(label_a, a, label_b, b)))
    }
}

/// Runs every applicable route and requires exact agreement; also checks the
/// degree law, the dual identity and `seeds` random orientations.
pub fn cross_validate(h: &Hypergraph, seeds: u64) -> Result<CrossValidation> {
    let lg = zeta_via_linegraph(h)?;
    let bass = zeta_via_bass(h)?;
    require_equal("linegraph", &lg.reciprocal, "bass", &bass.reciprocal)?;
    let mut routes = vec![lg.clone(), bass];
    if h.regularity().is_some() {
        let (f1, f2) = zeta_via_hashimoto(h)?;
        require_equal("linegraph", &lg.reciprocal, "hashimoto1", &f1.reciprocal)?;
        require_equal("linegraph", &lg.reciprocal, "hashimoto2", &f2.reciprocal)?;
        routes.push(f1);
        routes.push(f2);
    }
    let (core, _) = zeta_core(h)?;
    for seed in 0..seeds {
        let p = linegraph_determinant(&core, Orientation::Seeded(seed))?;
        require_equal("canonical", &lg.reciprocal, &format!("seed {seed}"), &p)?;
    }
    let dual = zeta_via_linegraph(&h.dual())?;
    require_equal("H", &lg.reciprocal, "dual", &dual.reciprocal)?;
    let degree = lg.reciprocal.degree().unwrap_or(0);
    let total_order = core.total_order();
    Ok(CrossValidation {
        bipartite_reciprocal: bipartite_reciprocal(&core)?,
        reciprocal: lg.reciprocal,
        routes,
        degree,
        total_order,
        degree_law_holds: degree == total_order,
        not_a_graph_zeta: degree % 2 == 1,
        dual_agrees: true,
        seeds_checked: seeds,
        warnings: lg.warnings,
    })
}

/// The four explicit functional equations of the regular case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionalEquationForm {
    /// `(1-u)^(n1-chi) (1+(r-1)u)^(n2-n1) (1-qu)^n1 zeta(u)`
    Lambda1,
    /// `(1-u)^(n2-chi) (1+(d-1)u)^(n1-n2) (1-qu)^n2 zeta(u)`
    Lambda2,
    /// `(1-u)^(-chi) (1+(r-1)u)^(n2-n1) (1+qu^2)^n1 zeta(u)`
    Xi1,
    /// `(1-u)^(-chi) (1+(d-1)u)^(n1-n2) (1+qu^2)^n2 zeta(u)`
    Xi2,
}

impl FunctionalEquationForm {
    pub const ALL: [FunctionalEquationForm; 4] = [
        FunctionalEquationForm::Lambda1,
        FunctionalEquationForm::Lambda2,
        FunctionalEquationForm::Xi1,
        FunctionalEquationForm::Xi2,
    ];
}

/// Which factorization a custom functional equation is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Uses `(1 + (r-1)u)^(n2-n1)` and `p(u)^n1`.
    Vertex,
    /// Uses `(1 + (d-1)u)^(n1-n2)` and `p(u)^n2`.
    Edge,
}

/// A completed zeta function `F(u) = prod f_i(u)^{k_i} * zeta(u)` together
/// with the sign in `F(u) = sign * F(1/(qu))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalEquation {
    pub factors: Vec<(IntPoly, i64)>,
    pub sign: i8,
}

impl FunctionalEquation {
    pub fn builtin(data: &RegularData, form: FunctionalEquationForm) -> Self {
        let (n1, n2) = (data.n1 as i64, data.n2 as i64);
        let q = data.q;
        let one_minus_qu = IntPoly::linear(1, -q);
        let one_plus_qu2 = IntPoly::from_i64s(&[1, 0, q]);
        let om = RegularData::one_minus_u();
        let factors = match form {
            FunctionalEquationForm::Lambda1 => vec![
                (om, n1 + data.neg_chi),
                (data.vertex_linear(), n2 - n1),
                (one_minus_qu, n1),
            ],
            FunctionalEquationForm::Lambda2 => vec![
                (om, n2 + data.neg_chi),
                (data.edge_linear(), n1 - n2),
                (one_minus_qu, n2),
            ],
            FunctionalEquationForm::Xi1 => vec![
                (om, data.neg_chi),
                (data.vertex_linear(), n2 - n1),
                (one_plus_qu2, n1),
            ],
            FunctionalEquationForm::Xi2 => vec![
                (om, data.neg_chi),
                (data.edge_linear(), n1 - n2),
                (one_plus_qu2, n2),
            ],
        };
        FunctionalEquation { factors, sign: 1 }
    }

    /// A caller-supplied `p(u)` with the sign the caller expects.
    pub fn custom(data: &RegularData, side: Side, p: IntPoly, sign: i8) -> Self {
        let (n1, n2) = (data.n1 as i64, data.n2 as i64);
        let factors = match side {
            Side::Vertex => vec![
                (p, n1),
                (RegularData::one_minus_u(), data.neg_chi),
                (data.vertex_linear(), n2 - n1),
            ],
            Side::Edge => vec![
                (p, n2),
                (RegularData::one_minus_u(), data.neg_chi),
                (data.edge_linear(), n1 - n2),
            ],
        };
        FunctionalEquation { factors, sign }
    }

    /// `F(u)` given the reciprocal zeta polynomial.
    pub fn evaluate(&self, reciprocal: &IntPoly, u: &Rational) -> Result<Rational> {
        let z = reciprocal.eval_rational(u);
        if z.is_zero() {
            return Err(Error::Undefined(format!("{u} (pole of zeta)")));
        }
        let mut value = Rational::one() / z;
        for (f, k) in &self.factors {
            let base = f.eval_rational(u);
            if base.is_zero() && *k < 0 {
                return Err(Error::Undefined(format!("{u} (zero of a prefactor)")));
            }
            value *= pow_signed(&base, *k);
        }
        Ok(value)
    }

    /// Exact check of `F(u) = sign * F(1/(qu))`.
    pub fn holds_at(&self, reciprocal: &IntPoly, q: i64, u: &Rational) -> Result<bool> {
        if u.is_zero() || q == 0 {
            return Err(Error::Undefined(format!("{u}")));
        }
        let mirror = (u * Rational::from_integer(BigInt::from(q))).recip();
        let lhs = self.evaluate(reciprocal, u)?;
        let rhs = self.evaluate(reciprocal, &mirror)?;
        Ok(lhs == rhs * Rational::from_integer(BigInt::from(self.sign)))
    }
}

fn pow_signed(base: &Rational, k: i64) -> Rational {
    let mut out = Rational::one();
    for _ in 0..k.unsigned_abs() {
        out *= base;
    }
    if k < 0 {
        out.recip()
    } else {
        out
    }
}

/// Checks one of the four explicit functional equations at `u`.
pub fn functional_equation_check(
    h: &Hypergraph,
    form: FunctionalEquationForm,
    u: &Rational,
) -> Result<bool> {
    let data = RegularData::new(h)?;
    let reciprocal = zeta_via_linegraph(&data.hypergraph)?.reciprocal;
    FunctionalEquation::builtin(&data, form).holds_at(&reciprocal, data.q, u)
}

/// Checks a functional equation built from a caller-supplied `p(u)`.
pub fn custom_functional_equation_check(
    h: &Hypergraph,
    side: Side,
    p: IntPoly,
    sign: i8,
    u: &Rational,
) -> Result<bool> {
    let data = RegularData::new(h)?;
    let reciprocal = zeta_via_linegraph(&data.hypergraph)?.reciprocal;
    FunctionalEquation::custom(&data, side, p, sign).holds_at(&reciprocal, data.q, u)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvennessReport {
    pub even: bool,
    /// Set when `even` is; a false value draws no conclusion.
    pub unimodular_implied: bool,
}

pub fn evenness_report(h: &Hypergraph) -> Result<EvennessReport> {
    let even = zeta_via_linegraph(h)?.reciprocal.is_even();
    Ok(EvennessReport {
        even,
        unimodular_implied: even,
    })
}

/// `det(I - uT)` after pruning, without requiring the zeta hypotheses;
/// problems are returned as warnings instead. Used where a formal value is
/// still meaningful (collapse families whose hypergraphs degenerate).
pub fn formal_reciprocal(h: &Hypergraph) -> Result<(IntPoly, Vec<Warning>)> {
    match zeta_via_linegraph(h) {
        Ok(z) => Ok((z.reciprocal, z.warnings)),
        Err(Error::Validation(why)) => {
            let core = h.prune_leaves();
            let mut warnings = vec![Warning::Unvalidated(why)];
            warnings.extend(strong_connectivity_warning(&core).filter(|_| core.n_vertices() > 0));
            Ok((linegraph_determinant(&core, Orientation::Canonical)?, warnings))
        }
        Err(e) => Err(e),
    }
}

/// Shorthand used by tests and examples: the reciprocal by the line-graph
/// route.
pub fn reciprocal_zeta(h: &Hypergraph) -> Result<IntPoly> {
    Ok(zeta_via_linegraph(h)?.reciprocal)
}
