use hyperzeta::matrix::IntMatrix;
use hyperzeta::poly::{char_poly, det_pencil, det_pencil_bareiss, series_reciprocal, RatSeries};
use hyperzeta::{IntPoly, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn matrix(n: usize, entries: &[i64]) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| BigInt::from(entries[i * n + j]))
}

/// Cofactor expansion of `det(c0 + u c1 + u^2 c2)` over polynomial entries.
fn cofactor(m: &[Vec<IntPoly>]) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut acc = IntPoly::zero();
    for j in 0..n {
        let minor: Vec<Vec<IntPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn pencil_strategy() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>)> {
    (1usize..=4).prop_flat_map(|n| {
        let v = || proptest::collection::vec(-6i64..=6, n * n);
        (Just(n), v(), v(), v())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn modular_engine_matches_cofactor_and_bareiss((n, a, b, c) in pencil_strategy()) {
        let (c0, c1, c2) = (matrix(n, &a), matrix(n, &b), matrix(n, &c));
        let fast = det_pencil(&c0, &c1, &c2).unwrap();
        prop_assert_eq!(&fast, &det_pencil_bareiss(&c0, &c1, &c2).unwrap());
        let entries: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| IntPoly::from_i64s(&[a[i * n + j], b[i * n + j], c[i * n + j]]))
                    .collect()
            })
            .collect();
        prop_assert_eq!(fast, cofactor(&entries));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn identity_pencil_shortcut_matches_bareiss(
        (n, e) in (1usize..=9).prop_flat_map(|n| (Just(n), proptest::collection::vec(-1i64..=1, n * n)))
    ) {
        let i = IntMatrix::identity(n);
        let z = IntMatrix::zeros(n, n);
        let t = matrix(n, &e);
        prop_assert_eq!(det_pencil(&i, &t, &z).unwrap(), det_pencil_bareiss(&i, &t, &z).unwrap());
        prop_assert_eq!(char_poly(&t).unwrap(), det_pencil_bareiss(&-&t, &i, &z).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reciprocal_series_inverts(tail in proptest::collection::vec(-5i64..=5, 0..8), order in 1usize..14) {
        let mut c = vec![1i64];
        c.extend(tail);
        let poly = IntPoly::from_i64s(&c);
        let inv = series_reciprocal(&poly, order).unwrap();
        let product = RatSeries::from_poly(&poly, order).mul_truncated(&inv);
        prop_assert_eq!(product, RatSeries::one(order));
    }

    #[test]
    fn char_poly_trace_and_det(n in 1usize..5, e in proptest::collection::vec(-4i64..=4, 16)) {
        let m = matrix(n, &e[..n * n]);
        let cp = char_poly(&m).unwrap();
        prop_assert_eq!(cp.leading(), BigInt::from(1));
        prop_assert_eq!(-cp.coeff(n - 1), m.trace());
        let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        prop_assert_eq!(cp.coeff(0), sign * m.determinant().unwrap());
    }

    #[test]
    fn shift_and_substitution(c in proptest::collection::vec(-9i64..=9, 1..7), a in -4i64..=4, x in -5i64..=5) {
        let poly = IntPoly::from_i64s(&c);
        let shifted = poly.shift(&BigInt::from(a));
        prop_assert_eq!(shifted.eval(&BigInt::from(x)), poly.eval(&BigInt::from(x + a)));
        let even = poly.inflate(2);
        prop_assert_eq!(even.substitute_even().unwrap(), poly.clone());
        let r = Rational::new(BigInt::from(x), BigInt::from(3));
        prop_assert_eq!(poly.eval_rational(&(&r * &r)), even.eval_rational(&r));
    }
}

#[test]
fn large_coefficients_survive_the_lift() {
    // det(10^40 I + u J) for the all-ones J
    let n = 3;
    let big = BigInt::from(10).pow(40);
    let c0 = IntMatrix::identity(n).scale(&big);
    let c1 = IntMatrix::from_fn(n, n, |_, _| BigInt::from(1));
    let p = det_pencil(&c0, &c1, &IntMatrix::zeros(n, n)).unwrap();
    // (10^40)^2 (10^40 + 3u)
    let expected = IntPoly::new(vec![big.pow(3), BigInt::from(3) * big.pow(2)]);
    assert_eq!(p, expected);
}
