//! Determinants of quadratic integer matrix pencils by evaluation and
//! interpolation.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{IntPoly, Rational};
use crate::error::{Error, Result};
use crate::matrix::{bareiss_determinant, IntMatrix};

/// Evaluation points `0, 1, -1, 2, -2, ...`.
fn sample_points(count: usize) -> Vec<BigInt> {
    (0..count)
        .map(|i| {
            let k = i.div_ceil(2) as i64;
            BigInt::from(if i % 2 == 1 { k } else { -k })
        })
        .collect()
}

/// `det(c0 + u c1 + u^2 c2)` as an exact integer polynomial in `u`.
///
/// The determinant has degree at most `2n` (`n` when `c2` vanishes). It is
/// sampled and interpolated modulo enough word-sized primes to pin down every
/// coefficient, then lifted by the Chinese remainder theorem. The common
/// case `det(I + u c1)` is the reversed characteristic polynomial of `-c1`.
pub fn det_pencil(c0: &IntMatrix, c1: &IntMatrix, c2: &IntMatrix) -> Result<IntPoly> {
    let deg = check_pencil(c0, c1, c2)?;
    let n = c0.rows();
    if c2.is_zero() && *c0 == IntMatrix::identity(n) {
        let cp = super::modular::char_poly_modular(&-c1);
        let mut coeffs = cp.coeffs().to_vec();
        coeffs.resize(n + 1, BigInt::zero());
        coeffs.reverse();
        return Ok(IntPoly::new(coeffs));
    }
    Ok(super::modular::det_pencil_modular(c0, c1, c2, deg))
}

/// Same value as [`det_pencil`], computed over the integers: Bareiss
/// elimination at each sample point and Newton interpolation over the
/// rationals, which must come out integral. Slower; kept as an oracle.
pub fn det_pencil_bareiss(c0: &IntMatrix, c1: &IntMatrix, c2: &IntMatrix) -> Result<IntPoly> {
    let n = c0.rows();
    let degree_bound = check_pencil(c0, c1, c2)?;
    let points = sample_points(degree_bound + 1);
    let values: Vec<BigInt> = points
        .par_iter()
        .map(|u| {
            let u2 = u * u;
            let entries = c0
                .entries()
                .iter()
                .zip(c1.entries())
                .zip(c2.entries())
                .map(|((a, b), c)| a + u * b + &u2 * c)
                .collect();
            bareiss_determinant(entries, n)
        })
        .collect();
    interpolate(&points, &values)
}

/// Validates dimensions and returns the degree bound.
fn check_pencil(c0: &IntMatrix, c1: &IntMatrix, c2: &IntMatrix) -> Result<usize> {
    let n = c0.rows();
    for (name, m) in [("c0", c0), ("c1", c1), ("c2", c2)] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{name} is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(if !c2.is_zero() {
        2 * n
    } else if !c1.is_zero() {
        n
    } else {
        0
    })
}

/// Newton interpolation through `(xs[i], ys[i])`, expanded to monomial form.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Result<IntPoly> {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.iter().cloned().map(Rational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = Rational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    // Horner on the Newton form: p = dd0 + (x - x0)(dd1 + (x - x1)(...)).
    let mut acc: Vec<Rational> = Vec::new();
    for i in (0..n).rev() {
        // acc <- acc * (x - xs[i]) + dd[i]
        let mut next = vec![Rational::zero(); acc.len() + 1];
        let xi = Rational::from_integer(xs[i].clone());
        for (j, c) in acc.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &xi;
        }
        next[0] += &dd[i];
        acc = next;
    }
    let mut coeffs = Vec::with_capacity(acc.len());
    for (i, c) in acc.into_iter().enumerate() {
        if !c.denom().is_one() {
            return Err(Error::Inconsistent(format!(
                "interpolated coefficient {i} is not an integer: {c}"
            )));
        }
        coeffs.push(c.to_integer());
    }
    Ok(IntPoly::new(coeffs))
}

/// `det(x I - m)`.
pub fn char_poly(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "characteristic polynomial of non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    Ok(super::modular::char_poly_modular(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> IntMatrix {
        // two directed 3-cycles: 0->1->2->0, 3->4->5->3
        let mut t = IntMatrix::zeros(6, 6);
        for (a, b) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            t.set(a, b, BigInt::one());
        }
        t
    }

    fn triangle_adjacency() -> IntMatrix {
        IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap()
    }

    #[test]
    fn identity_pencil() {
        let i = IntMatrix::identity(4);
        let z = IntMatrix::zeros(4, 4);
        assert_eq!(det_pencil(&i, &z, &z).unwrap(), IntPoly::one());
    }

    #[test]
    fn two_three_cycles() {
        let t = two_triangles();
        let z = IntMatrix::zeros(6, 6);
        let p = det_pencil(&IntMatrix::identity(6), &-&t, &z).unwrap();
        assert_eq!(p, IntPoly::from_i64s(&[1, 0, 0, -1]).pow(2));
    }

    #[test]
    fn bass_pencil_of_triangle() {
        let a = triangle_adjacency();
        let i = IntMatrix::identity(3);
        let p = det_pencil(&i, &-&a, &i).unwrap();
        // (1-u)^2 (1+u+u^2)^2
        let expected = &IntPoly::linear(1, -1).pow(2) * &IntPoly::from_i64s(&[1, 1, 1]).pow(2);
        assert_eq!(p, expected);
        assert_eq!(p, IntPoly::from_i64s(&[1, 0, 0, -1]).pow(2));
    }

    #[test]
    fn dimension_mismatch() {
        let i = IntMatrix::identity(2);
        let z = IntMatrix::zeros(3, 3);
        assert!(matches!(det_pencil(&i, &z, &z), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn char_poly_small() {
        // (x - 2)(x + 1)^2 = x^3 - 3x - 2
        assert_eq!(
            char_poly(&triangle_adjacency()).unwrap(),
            IntPoly::from_i64s(&[-2, -3, 0, 1])
        );
        assert_eq!(char_poly(&IntMatrix::zeros(2, 2)).unwrap(), IntPoly::monomial(2));
        assert!(char_poly(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn engines_agree() {
        let t = two_triangles();
        let a = IntMatrix::from_rows(&[vec![3, -1, 4], vec![1, -5, 9], vec![-2, 6, 5]]).unwrap();
        let b = IntMatrix::from_rows(&[vec![0, 7, -1], vec![2, 2, 0], vec![1, -8, 3]]).unwrap();
        let i = IntMatrix::identity(3);
        assert_eq!(det_pencil(&a, &b, &i).unwrap(), det_pencil_bareiss(&a, &b, &i).unwrap());
        let z = IntMatrix::zeros(6, 6);
        assert_eq!(
            det_pencil(&IntMatrix::identity(6), &-&t, &z).unwrap(),
            det_pencil_bareiss(&IntMatrix::identity(6), &-&t, &z).unwrap()
        );
        let big = a.scale(&BigInt::from(10).pow(30));
        assert_eq!(det_pencil(&big, &b, &i).unwrap(), det_pencil_bareiss(&big, &b, &i).unwrap());
        let zero = IntMatrix::zeros(3, 3);
        assert_eq!(det_pencil(&zero, &zero, &zero).unwrap(), IntPoly::zero());
        let e = IntMatrix::zeros(0, 0);
        assert_eq!(det_pencil(&e, &e, &e).unwrap(), IntPoly::one());
    }

    #[test]
    fn points_alternate() {
        let pts: Vec<i64> = sample_points(5)
            .into_iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(pts, vec![0, 1, -1, 2, -2]);
    }
}
