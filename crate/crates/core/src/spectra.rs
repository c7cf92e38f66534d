//! Spectra of regular hypergraphs: characteristic polynomial relations, the
//! Ramanujan decision by exact root counting, the pole audit of the zeta
//! function, and the modified Riemann hypothesis.
//!
//! Every decision is exact. Eigenvalues are handled through their isolating
//! intervals, and the only tolerance is the optional boundary band of
//! [`ramanujan_check`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::IntMatrix;
use crate::poly::{char_poly, IntPoly, RatPoly, Rational, RootInterval};
use crate::zeta::{reciprocal_zeta, RegularData};

/// Feng-Li bound `r - 2 + 2 sqrt(q)`, kept as `integer_part + sqrt(radicand)`
/// with `radicand = 4q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlonBoppana {
    pub integer_part: i64,
    pub radicand: i64,
}

impl AlonBoppana {
    /// The bound as an integer when `radicand` is a perfect square.
    pub fn exact_integer(&self) -> Option<i64> {
        let s = self.radicand.sqrt();
        (s * s == self.radicand).then_some(self.integer_part + s)
    }

    pub fn to_f64(&self) -> f64 {
        self.integer_part as f64 + (self.radicand as f64).sqrt()
    }

    /// Exact test `x > integer_part + sqrt(radicand)`.
    pub fn is_exceeded_by(&self, x: &Rational) -> bool {
        let t = x - Rational::from_integer(BigInt::from(self.integer_part));
        t.is_positive() && &t * &t > Rational::from_integer(BigInt::from(self.radicand))
    }
}

impl fmt::Display for AlonBoppana {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{} + sqrt({})", self.integer_part, self.radicand),
        }
    }
}

pub fn alon_boppana_bound(d: usize, r: usize) -> AlonBoppana {
    let q = ((d.max(1) - 1) * (r.max(1) - 1)) as i64;
    AlonBoppana {
        integer_part: r as i64 - 2,
        radicand: 4 * q,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharRelations {
    /// `A(B_H)^2` is block diagonal with blocks `A + dI` and `A* + rI`.
    pub eq2: bool,
    /// `Q(x) = P(x - d) P*(x - r)` with `Q` the characteristic polynomial of
    /// `A(B_H)^2`.
    pub eq3: bool,
    /// `x^|V| P*(x - r) = x^|E| P(x - d)`.
    pub eq4: bool,
}

pub fn verify_char_relations(h: &Hypergraph) -> Result<CharRelations> {
    let (d, r) = h.regularity().ok_or(Error::NotRegular)?;
    let p = char_poly(&h.adjacency_matrix())?;
    let p_star = char_poly(&h.dual().adjacency_matrix())?;
    let ab = h.bipartite().adjacency_matrix();
    let square = &ab * &ab;
    let dual_adj = h.dual().adjacency_matrix();
    let (n1, n2) = (h.n_vertices(), h.n_hyperedges());
    let blocks = IntMatrix::block(
        &(&h.adjacency_matrix() + &IntMatrix::identity(n1).scale(&BigInt::from(d))),
        &IntMatrix::zeros(n1, n2),
        &IntMatrix::zeros(n2, n1),
        &(&dual_adj + &IntMatrix::identity(n2).scale(&BigInt::from(r))),
    )?;
    let q = char_poly(&square)?;
    let p_shift = p.shift(&BigInt::from(-(d as i64)));
    let p_star_shift = p_star.shift(&BigInt::from(-(r as i64)));
    Ok(CharRelations {
        eq2: square == blocks,
        eq3: q == &p_shift * &p_star_shift,
        eq4: &IntPoly::monomial(h.n_vertices()) * &p_star_shift
            == &IntPoly::monomial(h.n_hyperedges()) * &p_shift,
    })
}

/// True when `A(B_H)^2` has no negative eigenvalue (Sturm count on
/// `(-inf, 0)`).
pub fn bipartite_square_nonnegative(h: &Hypergraph) -> Result<bool> {
    let ab = h.bipartite().adjacency_matrix();
    let q = char_poly(&(&ab * &ab))?.to_ratpoly();
    let zero = Rational::zero();
    let at_zero = usize::from(q.eval(&zero).is_zero());
    Ok(q.count_roots(None, Some(&zero)) == at_zero)
}

/// Which hypergraph carries the obvious eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    Hypergraph,
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ObviousEigenvalue {
    pub value: i64,
    pub multiplicity: usize,
    pub carrier: Carrier,
}

/// `-d` with multiplicity `|V| - |E|` when `d < r`; when `r < d` the dual
/// carries `-r` with multiplicity `|E| - |V|`; nothing when `d = r`.
pub fn obvious_eigenvalues(h: &Hypergraph) -> Result<Option<ObviousEigenvalue>> {
    let (d, r) = h.regularity().ok_or(Error::NotRegular)?;
    let (n, m) = (h.n_vertices(), h.n_hyperedges());
    Ok(match d.cmp(&r) {
        std::cmp::Ordering::Less => Some(ObviousEigenvalue {
            value: -(d as i64),
            multiplicity: n - m,
            carrier: Carrier::Hypergraph,
        }),
        std::cmp::Ordering::Greater => Some(ObviousEigenvalue {
            value: -(r as i64),
            multiplicity: m - n,
            carrier: Carrier::Dual,
        }),
        std::cmp::Ordering::Equal => None,
    })
}

/// Where an eigenvalue sits relative to `[r-2-2sqrt(q), r-2+2sqrt(q)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Position {
    Below,
    Inside,
    Boundary,
    Above,
}

impl Position {
    pub fn in_closed_interval(self) -> bool {
        matches!(self, Position::Inside | Position::Boundary)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedRoot {
    pub eigenvalue: RootInterval,
    pub multiplicity: usize,
    pub position: Position,
}

fn rat(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Real roots of `p` with multiplicities, each placed relative to the closed
/// interval `|x - shift| <= sqrt(four_q)`.
pub fn classify_roots(p: &IntPoly, shift: i64, four_q: i64) -> Vec<ClassifiedRoot> {
    let g_int = &IntPoly::linear(-shift, 1).pow(2) - &IntPoly::constant(BigInt::from(four_q));
    let g = g_int.to_ratpoly();
    let centre = rat(shift);
    let width = Rational::new(BigInt::one(), BigInt::from(1u64 << 20));
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    for (mult, factor) in p.to_ratpoly().squarefree_decomposition() {
        let common = factor.gcd(&g);
        if common.degree().unwrap_or(0) > 0 {
            for iv in common.isolate_real_roots(&width) {
                out.push(ClassifiedRoot {
                    eigenvalue: iv,
                    multiplicity: mult,
                    position: Position::Boundary,
                });
            }
        }
        let (rest, _) = factor.div_rem(&common);
        for iv in rest.isolate_real_roots(&width) {
            let (eigenvalue, position) = settle(&rest, iv, &g, &centre);
            out.push(ClassifiedRoot {
                eigenvalue,
                multiplicity: mult,
                position,
            });
        }
    }
    out.sort_by(|a, b| a.eigenvalue.lo.cmp(&b.eigenvalue.lo));
    out
}

/// Bisects until the interval lies on one side of both roots of `g`.
fn settle(f: &RatPoly, mut iv: RootInterval, g: &RatPoly, centre: &Rational) -> (RootInterval, Position) {
    let two = rat(2);
    loop {
        let gl = g.eval(&iv.lo);
        let gh = g.eval(&iv.hi);
        if iv.exact {
            let pos = match gl.signum() {
                s if s.is_negative() => Position::Inside,
                s if s.is_zero() => Position::Boundary,
                _ if &iv.lo > centre => Position::Above,
                _ => Position::Below,
            };
            return (iv, pos);
        }
        if gl.is_negative() && gh.is_negative() {
            return (iv, Position::Inside);
        }
        if gl.is_positive() && gh.is_positive() {
            if &iv.hi <= centre {
                return (iv, Position::Below);
            }
            if &iv.lo >= centre {
                return (iv, Position::Above);
            }
        }
        let mid = (&iv.lo + &iv.hi) / &two;
        if f.eval(&mid).is_zero() {
            iv = RootInterval { lo: mid.clone(), hi: mid, exact: true };
        } else if f.count_roots(Some(&iv.lo), Some(&mid)) == 1 {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ramanujan {
    Yes,
    No,
    /// Every offending root lies within the tolerance band just outside the
    /// closed interval.
    BoundaryWithinTolerance,
}

impl fmt::Display for Ramanujan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ramanujan::Yes => "yes",
            Ramanujan::No => "no",
            Ramanujan::BoundaryWithinTolerance => "boundary-within-tolerance",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda2Check {
    /// Largest non-trivial eigenvalue, if any.
    pub lambda2: Option<RootInterval>,
    /// `lambda2 > r - 2 + 2 sqrt(q)`, decided exactly.
    pub exceeds_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReport {
    pub char_poly: IntPoly,
    pub d: usize,
    pub r: usize,
    pub q: i64,
    pub obvious: Option<ObviousEigenvalue>,
    /// `d(r - 1)`, exact.
    pub lambda1: RootInterval,
    pub lambda2_bound_check: Lambda2Check,
    /// Non-trivial, non-obvious eigenvalues.
    pub eigenvalues: Vec<ClassifiedRoot>,
    pub ramanujan: Ramanujan,
    /// Eigenvalues (with multiplicity) beyond the tolerance band.
    pub violating: usize,
    /// Eigenvalues (with multiplicity) inside the tolerance band.
    pub boundary_band: usize,
    pub alon_boppana: AlonBoppana,
    pub tolerance: Rational,
}

/// Default boundary band, `1e-9`.
pub fn default_tolerance() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10).pow(9))
}

/// Counts, with multiplicity, roots `y` of `s` with `y^2 > 4q + band` and
/// with `4q < y^2 < 4q + band`.
fn count_outside(s: &IntPoly, four_q: i64, band: &Rational) -> Result<(usize, usize)> {
    if s.degree().unwrap_or(0) == 0 {
        return Ok((0, 0));
    }
    // T(y^2) = s(y) s(-y): the roots of T are the squares of the roots of s.
    let t = (s * &s.reflect()).substitute_even()?;
    let edge = rat(four_q);
    let outer = &edge + band;
    let (mut far, mut near) = (0, 0);
    for (mult, f) in t.to_ratpoly().squarefree_decomposition() {
        far += mult * f.count_roots(Some(&outer), None);
        if band.is_positive() {
            let on_outer = usize::from(f.eval(&outer).is_zero());
            near += mult * (f.count_roots(Some(&edge), Some(&outer)) - on_outer);
        }
    }
    Ok((far, near))
}

fn regular_connected(h: &Hypergraph) -> Result<(usize, usize)> {
    let (d, r) = h.regularity().ok_or(Error::NotRegular)?;
    if !h.validate().connected {
        return Err(Error::Disconnected);
    }
    if d < 2 || r < 2 {
        return Err(Error::Validation(format!("({d},{r})-regular: need d, r >= 2")));
    }
    Ok((d, r))
}

/// Decides whether every non-obvious eigenvalue `lambda != d(r-1)` satisfies
/// `|lambda - r + 2| <= 2 sqrt(q)`.
pub fn ramanujan_check(h: &Hypergraph, tolerance: &Rational) -> Result<SpectralReport> {
    let (d, r) = regular_connected(h)?;
    let q = ((d - 1) * (r - 1)) as i64;
    let four_q = 4 * q;
    let p = char_poly(&h.adjacency_matrix())?;
    let l1 = (d * (r - 1)) as i64;
    let perron = IntPoly::linear(-l1, 1);
    let mut stripped = p.div_exact(&perron).map_err(|_| Error::Disconnected)?;
    if stripped.div_exact(&perron).is_ok() {
        return Err(Error::Disconnected);
    }
    let obvious = obvious_eigenvalues(h)?;
    if let Some(o) = obvious.filter(|o| o.carrier == Carrier::Hypergraph) {
        stripped = stripped
            .mul_power(&IntPoly::linear(-o.value, 1), -(o.multiplicity as i64))
            .map_err(|e| Error::Inconsistent(format!("obvious eigenvalue missing: {e}")))?;
    }
    let shift = r as i64 - 2;
    let s = stripped.shift(&BigInt::from(shift));
    let band = tolerance.abs() * tolerance.abs();
    let (violating, boundary_band) = count_outside(&s, four_q, &band)?;
    let ramanujan = if violating > 0 {
        Ramanujan::No
    } else if boundary_band > 0 {
        Ramanujan::BoundaryWithinTolerance
    } else {
        Ramanujan::Yes
    };
    let eigenvalues = classify_roots(&stripped, shift, four_q);
    let lambda2 = eigenvalues.last().map(|c| c.eigenvalue.clone());
    let exceeds_bound = eigenvalues.iter().any(|c| c.position == Position::Above);
    Ok(SpectralReport {
        char_poly: p,
        d,
        r,
        q,
        obvious,
        lambda1: RootInterval { lo: rat(l1), hi: rat(l1), exact: true },
        lambda2_bound_check: Lambda2Check { lambda2, exceeds_bound },
        eigenvalues,
        ramanujan,
        violating,
        boundary_band,
        alon_boppana: alon_boppana_bound(d, r),
        tolerance: tolerance.clone(),
    })
}

/// Det part of `zeta^-1` with the trivial factor `(1-u)(1-qu)` removed.
/// Its degree is `2m` with `m = n1 - 1`.
pub fn nontrivial_det_part(data: &RegularData, reciprocal: &IntPoly) -> Result<IntPoly> {
    let inconsistent = |e: Error| Error::Inconsistent(format!("zeta prefactor: {e}"));
    let det = reciprocal
        .mul_power(&RegularData::one_minus_u(), -data.neg_chi)
        .and_then(|p| p.mul_power(&data.vertex_linear(), data.n1 as i64 - data.n2 as i64))
        .map_err(inconsistent)?;
    let trivial = &RegularData::one_minus_u() * &IntPoly::linear(1, -data.q);
    det.div_exact(&trivial).map_err(inconsistent)
}

/// Rewrites the palindromic `R(u) = prod_i (1 - y_i u + q u^2)` as
/// `S(y) = prod_i (y - y_i)`, using `u^-m R(u) = S(u^-1 + qu)`.
pub fn palindromic_to_trace_poly(rpoly: &IntPoly, q: i64) -> Result<IntPoly> {
    let deg = rpoly.degree().unwrap_or(0);
    if deg % 2 == 1 {
        return Err(Error::Inconsistent(format!("odd degree {deg} det part")));
    }
    let m = deg / 2;
    let qb = BigInt::from(q);
    let mut qj = BigInt::one();
    for j in 0..=m {
        if rpoly.coeff(m + j) != &qj * rpoly.coeff(m - j) {
            return Err(Error::Inconsistent(format!(
                "det part is not q-palindromic at offset {j}: {rpoly}"
            )));
        }
        qj *= &qb;
    }
    // W_0 = 2, W_1 = y, W_{j+1} = y W_j - q W_{j-1}, with W_j = u^-j + q^j u^j.
    let y = IntPoly::monomial(1);
    let qc = IntPoly::constant(qb);
    let mut s = IntPoly::constant(rpoly.coeff(m));
    let (mut prev, mut cur) = (IntPoly::constant(BigInt::from(2)), y.clone());
    for j in 1..=m {
        s = &s + &cur.scale(&rpoly.coeff(m - j));
        let next = &(&y * &cur) - &(&qc * &prev);
        prev = cur;
        cur = next;
    }
    Ok(s)
}

/// The modified Riemann hypothesis, read off the zeta polynomial alone: all
/// non-trivial roots of the det part lie on `|u| = q^(-1/2)`. The verdict must
/// agree with [`ramanujan_check`] at zero tolerance.
pub fn riemann_hypothesis_check(h: &Hypergraph) -> Result<bool> {
    let data = RegularData::new(h)?;
    let reciprocal = reciprocal_zeta(&data.hypergraph)?;
    let s = palindromic_to_trace_poly(&nontrivial_det_part(&data, &reciprocal)?, data.q)?;
    let (off_circle, _) = count_outside(&s, 4 * data.q, &Rational::zero())?;
    let rh = off_circle == 0;
    let spectral = ramanujan_check(h, &Rational::zero())?.ramanujan;
    if rh != (spectral == Ramanujan::Yes) {
        return Err(Error::Inconsistent(format!(
            "Riemann hypothesis check gives {rh} but the Ramanujan check gives {spectral}"
        )));
    }
    Ok(rh)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetPartRoot {
    pub eigenvalue: RootInterval,
    pub multiplicity: usize,
    /// `lambda = d(r-1)`, whose factor is `(1-u)(1-qu)`.
    pub trivial: bool,
    /// Both roots of `1 - (lambda-r+2)u + qu^2` have modulus `q^(-1/2)`.
    pub on_critical_circle: bool,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleReport {
    pub dualized: bool,
    pub d: usize,
    pub r: usize,
    pub q: i64,
    /// `-chi(B_H)`, the exponent of `(1-u)` in the prefactor.
    pub prefactor_mult_at_1: usize,
    /// `n2 - n1`, the exponent of `(1+(r-1)u)` in the prefactor.
    pub prefactor_mult_at_neg_inv_r_minus_1: usize,
    /// Total multiplicity of the root `u = 1` of `zeta^-1`.
    pub mult_at_1: usize,
    /// Total multiplicity of the root `u = -1/(r-1)` of `zeta^-1`.
    pub mult_at_neg_inv_r_minus_1: usize,
    pub det_part_roots: Vec<DetPartRoot>,
}

impl PoleReport {
    pub fn off_circle(&self) -> impl Iterator<Item = &DetPartRoot> {
        self.det_part_roots
            .iter()
            .filter(|r| !r.trivial && !r.on_critical_circle)
    }
}

pub fn pole_audit(h: &Hypergraph) -> Result<PoleReport> {
    let data = RegularData::new(h)?;
    let reciprocal = reciprocal_zeta(&data.hypergraph)?;
    // Exact division proves the prefactor exponents.
    nontrivial_det_part(&data, &reciprocal)?;
    let (mult_at_1, _) = reciprocal.factor_multiplicity(&RegularData::one_minus_u());
    let (mult_neg, _) = reciprocal.factor_multiplicity(&data.vertex_linear());
    let l1 = (data.d * (data.r - 1)) as i64;
    let shift = data.r as i64 - 2;
    let p = char_poly(&data.hypergraph.adjacency_matrix())?;
    let det_part_roots = classify_roots(&p, shift, 4 * data.q)
        .into_iter()
        .map(|c| {
            let trivial = c.eigenvalue.exact && c.eigenvalue.lo == rat(l1);
            let on = !trivial && c.position.in_closed_interval();
            let description = if trivial {
                "u = 1 and u = 1/q".to_string()
            } else {
                match c.position {
                    Position::Inside => "complex pair on |u| = 1/sqrt(q)".to_string(),
                    Position::Boundary => "double real root on |u| = 1/sqrt(q)".to_string(),
                    _ => "real pair off |u| = 1/sqrt(q)".to_string(),
                }
            };
            DetPartRoot {
                eigenvalue: c.eigenvalue,
                multiplicity: c.multiplicity,
                trivial,
                on_critical_circle: on,
                description,
            }
        })
        .collect();
    Ok(PoleReport {
        dualized: data.dualized,
        d: data.d,
        r: data.r,
        q: data.q,
        prefactor_mult_at_1: data.neg_chi as usize,
        prefactor_mult_at_neg_inv_r_minus_1: data.n2 - data.n1,
        mult_at_1,
        mult_at_neg_inv_r_minus_1: mult_neg,
        det_part_roots,
    })
}

/// Floating-point view of an eigenvalue, for display only.
pub fn approx(iv: &RootInterval) -> f64 {
    if iv.exact {
        iv.lo.to_f64().unwrap_or(f64::NAN)
    } else {
        iv.midpoint_f64()
    }
}

/// `A(H)` shifted by `-(r-2)`, whose spectrum is compared against `2 sqrt(q)`.
pub fn shifted_adjacency(h: &Hypergraph, r: usize) -> IntMatrix {
    let a = h.adjacency_matrix();
    let n = a.rows();
    &a - &IntMatrix::identity(n).scale(&BigInt::from(r as i64 - 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Hypergraph {
        Hypergraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn c6() -> Hypergraph {
        Hypergraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap()
    }

    fn fano() -> Hypergraph {
        let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        Hypergraph::new(7, lines.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn bound_examples() {
        assert_eq!(alon_boppana_bound(3, 2), AlonBoppana { integer_part: 0, radicand: 8 });
        assert_eq!(alon_boppana_bound(3, 3).exact_integer(), Some(5));
        assert_eq!(alon_boppana_bound(2, 2).exact_integer(), Some(2));
        assert_eq!(alon_boppana_bound(3, 2).to_string(), "0 + sqrt(8)");
        let b = alon_boppana_bound(3, 2);
        assert!(b.is_exceeded_by(&Rational::new(BigInt::from(29), BigInt::from(10))));
        assert!(!b.is_exceeded_by(&Rational::new(BigInt::from(28), BigInt::from(10))));
    }

    #[test]
    fn char_relations() {
        assert_eq!(verify_char_relations(&k4()).unwrap(), CharRelations { eq2: true, eq3: true, eq4: true });
        assert_eq!(verify_char_relations(&fano()).unwrap(), CharRelations { eq2: true, eq3: true, eq4: true });
        let hub = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(verify_char_relations(&hub), Err(Error::NotRegular));
        assert!(bipartite_square_nonnegative(&hub).unwrap());
    }

    #[test]
    fn obvious_examples() {
        assert_eq!(obvious_eigenvalues(&fano()).unwrap(), None);
        let o = obvious_eigenvalues(&k4()).unwrap().unwrap();
        assert_eq!((o.value, o.multiplicity, o.carrier), (-2, 2, Carrier::Dual));
        let o = obvious_eigenvalues(&k4().dual()).unwrap().unwrap();
        assert_eq!((o.value, o.multiplicity, o.carrier), (-2, 2, Carrier::Hypergraph));
    }

    #[test]
    fn ramanujan_examples() {
        let k = ramanujan_check(&k4(), &default_tolerance()).unwrap();
        assert_eq!(k.ramanujan, Ramanujan::Yes);
        assert_eq!(k.eigenvalues.len(), 1);
        assert_eq!(k.eigenvalues[0].multiplicity, 3);
        assert_eq!(k.eigenvalues[0].eigenvalue.lo, rat(-1));
        let c = ramanujan_check(&c6(), &Rational::zero()).unwrap();
        assert_eq!(c.ramanujan, Ramanujan::Yes);
        assert!(c.eigenvalues.iter().any(|e| e.position == Position::Boundary));
        let f = ramanujan_check(&fano(), &default_tolerance()).unwrap();
        assert_eq!(f.ramanujan, Ramanujan::Yes);
        // the dual of K4 strips -2 twice and keeps the same verdict
        let kd = ramanujan_check(&k4().dual(), &default_tolerance()).unwrap();
        assert_eq!(kd.ramanujan, Ramanujan::Yes);
        assert_eq!(kd.eigenvalues.iter().map(|e| e.multiplicity).sum::<usize>(), 3);
    }

    #[test]
    fn tolerance_band() {
        // roots y = ±sqrt(4.01), just beyond 2 sqrt(q) for q = 1
        let s = IntPoly::from_i64s(&[-401, 0, 100]); // y^2 = 4.01
        let band = Rational::new(BigInt::one(), BigInt::from(50)); // 0.02
        assert_eq!(count_outside(&s, 4, &band).unwrap(), (0, 2));
        assert_eq!(count_outside(&s, 4, &Rational::zero()).unwrap(), (2, 0));
    }

    #[test]
    fn ramanujan_requires_regular_connected() {
        let hub = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(ramanujan_check(&hub, &default_tolerance()), Err(Error::NotRegular));
        let two_triangles =
            Hypergraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(ramanujan_check(&two_triangles, &default_tolerance()), Err(Error::Disconnected));
    }

    #[test]
    fn trace_poly_matches_spectrum() {
        let data = RegularData::new(&k4()).unwrap();
        let z = reciprocal_zeta(&k4()).unwrap();
        let s = palindromic_to_trace_poly(&nontrivial_det_part(&data, &z).unwrap(), data.q).unwrap();
        assert_eq!(s, IntPoly::linear(1, 1).pow(3));
    }

    #[test]
    fn rh_examples() {
        assert!(riemann_hypothesis_check(&k4()).unwrap());
        assert!(riemann_hypothesis_check(&fano()).unwrap());
        assert!(riemann_hypothesis_check(&c6()).unwrap());
    }

    #[test]
    fn pole_audit_k4() {
        let p = pole_audit(&k4()).unwrap();
        assert_eq!(p.prefactor_mult_at_1, 2);
        assert_eq!(p.mult_at_1, 3);
        assert_eq!(p.prefactor_mult_at_neg_inv_r_minus_1, 2);
        assert_eq!(p.mult_at_neg_inv_r_minus_1, 2);
        assert_eq!(p.off_circle().count(), 0);
        assert!(p.det_part_roots.iter().any(|r| r.trivial));
    }

    #[test]
    fn pole_audit_fano() {
        let p = pole_audit(&fano()).unwrap();
        assert_eq!(p.prefactor_mult_at_1, 7 * 2 - 7);
        assert_eq!(p.prefactor_mult_at_neg_inv_r_minus_1, 0);
        assert_eq!(p.off_circle().count(), 0);
        let trivial: Vec<_> = p.det_part_roots.iter().filter(|r| r.trivial).collect();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].multiplicity, 1);
    }
}
