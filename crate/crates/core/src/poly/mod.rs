//! Exact univariate polynomials over the integers, plus the series, pencil
//! determinant and real-root machinery built on them.

mod det;
mod modular;
mod ratpoly;
mod series;

pub use det::{char_poly, det_pencil, det_pencil_bareiss};
pub use ratpoly::{RatPoly, RootInterval};
pub use series::{euler_product_truncation, exp_weighted_counts, series_reciprocal, RatSeries};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Polynomial with integer coefficients, ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::from_i64s(&[c0, c1])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &BigInt) -> Self {
        // Horner with the linear polynomial x + a.
        let lin = IntPoly::new(vec![a.clone(), BigInt::one()]);
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * &lin) + &IntPoly::constant(c.clone())
        })
    }

    /// True when every odd-degree coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// For an even `p`, the `q` with `q(x^2) = p(x)`.
    pub fn substitute_even(&self) -> Result<Self> {
        if let Some(i) = (1..self.coeffs.len())
            .step_by(2)
            .find(|&i| !self.coeffs[i].is_zero())
        {
            return Err(Error::NotEven(i));
        }
        Ok(Self::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// `p(x^k)`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Quotient and remainder for a divisor whose leading coefficient is a
    /// unit (`±1`); integral in that case.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let lead = divisor.leading();
        if !lead.abs().is_one() {
            return Err(Error::InexactDivision("divisor leading coefficient is not ±1".into()));
        }
        self.div_rem_int(divisor)
    }

    /// Integer long division; fails if a quotient coefficient is fractional.
    fn div_rem_int(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((IntPoly::zero(), self.clone()));
        };
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {top} not divisible by {lead}"
                )));
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient `self / divisor`, failing when the division leaves a
    /// remainder or a fractional coefficient.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_int(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("{self} / {divisor} leaves {r}")));
        }
        Ok(q)
    }

    /// Largest `k` with `factor^k | self`, found by repeated exact division.
    /// Returns the multiplicity and the cofactor.
    pub fn factor_multiplicity(&self, factor: &IntPoly) -> (usize, IntPoly) {
        let mut k = 0;
        let mut rest = self.clone();
        if factor.degree().unwrap_or(0) == 0 || self.is_zero() {
            return (0, rest);
        }
        while let Ok(q) = rest.div_exact(factor) {
            rest = q;
            k += 1;
        }
        (k, rest)
    }

    /// Multiplies by `factor^exp` for `exp >= 0`, or divides exactly by
    /// `factor^-exp` for `exp < 0`.
    pub fn mul_power(&self, factor: &IntPoly, exp: i64) -> Result<IntPoly> {
        let power = factor.pow(exp.unsigned_abs() as u32);
        if exp >= 0 {
            Ok(self * &power)
        } else {
            self.div_exact(&power)
        }
    }

    pub fn to_ratpoly(&self) -> RatPoly {
        RatPoly::from_int(self)
    }

    /// Canonical text form: ascending coefficients separated by spaces. The
    /// zero polynomial prints as `0`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        parts.join(" ")
    }

    /// Human-readable form in `u`, e.g. `1 - u^3`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_coeff_string())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]", self.to_coeff_string())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split_whitespace()
            .map(|w| {
                w.parse::<BigInt>()
                    .map_err(|_| Error::BadPolynomial(format!("bad coefficient {w:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl Ord for IntPoly {
    /// Degree first, then coefficients from the constant term upward; gives
    /// multisets of polynomials a canonical sort order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

/// The degree-9 reciprocal zeta polynomial of the four-vertex hypergraph with
/// hyperedges `{0,1,2}, {0,3}, {1,3}, {2,3}`, as the factored product
/// `(1 - u)(1 + u + u^2 - 5u^3 - 5u^4 - 5u^5 + 4u^6 + 4u^7 + 4u^8)`.
pub fn hub_reciprocal() -> IntPoly {
    &IntPoly::linear(1, -1) * &IntPoly::from_i64s(&[1, 1, 1, -5, -5, -5, 4, 4, 4])
}
