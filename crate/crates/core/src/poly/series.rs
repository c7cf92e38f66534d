//! Truncated power series with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntPoly, Rational};
use crate::error::{Error, Result};

/// Coefficients `c_0 .. c_order` of a power series truncated after `u^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<Rational>,
}

impl RatSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        RatSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| Rational::from_integer(p.coeff(i)))
            .collect();
        RatSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul_truncated(&self, rhs: &RatSeries) -> RatSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        RatSeries { coeffs: out }
    }

    pub fn truncate(&self, order: usize) -> RatSeries {
        RatSeries::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }
}

impl fmt::Debug for RatSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "RatSeries[{}]", parts.join(" "))
    }
}

/// First `order + 1` coefficients of `1 / p`. Requires `p(0) = 1`, which
/// keeps every coefficient integral.
pub fn series_reciprocal(p: &IntPoly, order: usize) -> Result<RatSeries> {
    if !p.coeff(0).is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
    out.push(BigInt::one());
    for k in 1..=order {
        let mut acc = BigInt::zero();
        for j in 1..=k.min(p.coeffs().len().saturating_sub(1)) {
            acc -= p.coeff(j) * &out[k - j];
        }
        out.push(acc);
    }
    let series = RatSeries {
        coeffs: out.into_iter().map(Rational::from_integer).collect(),
    };
    debug_assert!(series.is_integral());
    Ok(series)
}

/// `exp(sum_k N_k u^k / k)` truncated at order `counts.len()`.
///
/// Uses `k e_k = sum_{j=1..k} N_j e_{k-j}`, which follows from `E' = S' E`.
pub fn exp_weighted_counts(counts: &[BigInt]) -> RatSeries {
    let order = counts.len();
    let mut e = vec![Rational::one()];
    for k in 1..=order {
        let mut acc = Rational::zero();
        for j in 1..=k {
            acc += Rational::from_integer(counts[j - 1].clone()) * &e[k - j];
        }
        e.push(acc / Rational::from_integer(BigInt::from(k)));
    }
    RatSeries { coeffs: e }
}

/// `prod_l (1 - u^l)^(-count(l))` truncated at `order`.
pub fn euler_product_truncation(prime_counts: &BTreeMap<usize, u64>, order: usize) -> RatSeries {
    let mut acc = RatSeries::one(order);
    for (&len, &count) in prime_counts {
        if len == 0 || len > order || count == 0 {
            continue;
        }
        // (1 - u^len)^(-count) = sum_i C(count + i - 1, i) u^(len i)
        let mut factor = vec![Rational::zero(); order + 1];
        let mut binom = BigInt::one();
        let c = BigInt::from(count);
        let mut i = 0usize;
        while len * i <= order {
            factor[len * i] = Rational::from_integer(binom.clone());
            i += 1;
            binom = binom * (&c + BigInt::from(i - 1)) / BigInt::from(i);
        }
        acc = acc.mul_truncated(&RatSeries { coeffs: factor });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::hub_reciprocal;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn geometric_series() {
        let s = series_reciprocal(&IntPoly::linear(1, -1), 3).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn squared_cube_reciprocal() {
        let p = IntPoly::from_i64s(&[1, 0, 0, -1]).pow(2);
        let s = series_reciprocal(&p, 6).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 0, 0, 2, 0, 0, 3]).as_slice());
    }

    #[test]
    fn golden_cubic_coefficient_counts_triangles() {
        // Six directed triangles, each alternating between the 3-edge and two 2-edges.
        let s = series_reciprocal(&hub_reciprocal(), 3).unwrap();
        assert_eq!(s.coeff(3), &Rational::from_integer(BigInt::from(6)));
    }

    #[test]
    fn reciprocal_requires_unit_constant() {
        assert_eq!(
            series_reciprocal(&IntPoly::linear(2, 1), 3),
            Err(Error::ConstantTermNotOne)
        );
    }

    #[test]
    fn exp_of_counts() {
        let counts: Vec<BigInt> = [0, 0, 6].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(exp_weighted_counts(&counts).coeffs(), ints(&[1, 0, 0, 2]).as_slice());
        let zeros = vec![BigInt::zero(); 4];
        assert_eq!(exp_weighted_counts(&zeros), RatSeries::one(4));
    }

    #[test]
    fn euler_product_cases() {
        let counts = BTreeMap::from([(3, 2)]);
        assert_eq!(
            euler_product_truncation(&counts, 6).coeffs(),
            ints(&[1, 0, 0, 2, 0, 0, 3]).as_slice()
        );
        assert_eq!(euler_product_truncation(&BTreeMap::new(), 5), RatSeries::one(5));
    }
}
