//! Multi-modular evaluation and interpolation for pencil determinants.
//!
//! Each prime `p < 2^31` gives the determinant polynomial modulo `p` by
//! elimination at `deg + 1` points and Newton interpolation in `F_p`. The
//! residues are combined by the Chinese remainder theorem until the modulus
//! exceeds twice a bound on every coefficient, so the symmetric lift is exact.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::IntPoly;
use crate::matrix::IntMatrix;

fn is_prime_u32(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // deterministic below 4_759_123_141
    'witness: for a in [2u64, 7, 61] {
        if a % n == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^31`, descending.
fn primes() -> impl Iterator<Item = u64> {
    (1u64..(1 << 31)).rev().filter(|&n| n % 2 == 1 && is_prime_u32(n))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

/// Determinant over `F_p` by Gaussian elimination; consumes `a`.
fn det_mod(mut a: Vec<u64>, n: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i * n + k] != 0) else {
            return 0;
        };
        if piv != k {
            for j in 0..n {
                a.swap(k * n + j, piv * n + j);
            }
            det = (p - det) % p;
        }
        let pivot = a[k * n + k];
        det = det * pivot % p;
        let inv = inv_mod(pivot, p);
        for i in k + 1..n {
            let f = a[i * n + k] * inv % p;
            if f == 0 {
                continue;
            }
            for j in k + 1..n {
                let sub = f * a[k * n + j] % p;
                a[i * n + j] = (a[i * n + j] + p - sub) % p;
            }
        }
    }
    det
}

/// Coefficients modulo `p` of `det(c0 + u c1 + u^2 c2)`, degree at most `deg`.
fn pencil_mod(res: &[Vec<u64>; 3], n: usize, deg: usize, p: u64) -> Vec<u64> {
    let xs: Vec<u64> = (0..=deg as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&u| {
            let u2 = u * u % p;
            let entries = (0..n * n)
                .map(|i| (res[0][i] + u * res[1][i] % p + u2 * res[2][i] % p) % p)
                .collect();
            det_mod(entries, n, p)
        })
        .collect();
    // Newton divided differences, then expansion from the innermost term.
    let mut dd = ys;
    for level in 1..xs.len() {
        for i in (level..xs.len()).rev() {
            let num = (dd[i] + p - dd[i - 1]) % p;
            let den = (xs[i] + p - xs[i - level]) % p;
            dd[i] = num * inv_mod(den, p) % p;
        }
    }
    let mut acc: Vec<u64> = Vec::new();
    for i in (0..xs.len()).rev() {
        let mut next = vec![0u64; acc.len() + 1];
        for (j, &c) in acc.iter().enumerate() {
            next[j + 1] = (next[j + 1] + c) % p;
            next[j] = (next[j] + p - c * xs[i] % p) % p;
        }
        next[0] = (next[0] + dd[i]) % p;
        acc = next;
    }
    acc
}

/// Bound on the absolute value of every coefficient: the product over rows
/// of the summed coefficient norms of the entries.
fn coefficient_bound(c: [&IntMatrix; 3], n: usize) -> BigInt {
    let mut bound = BigInt::one();
    for i in 0..n {
        let row: BigInt = (0..n)
            .map(|j| c.iter().map(|m| m.get(i, j).abs()).sum::<BigInt>())
            .sum();
        if row.is_zero() {
            return BigInt::zero();
        }
        bound *= row;
    }
    bound
}

/// `det(c0 + u c1 + u^2 c2)` with at most `deg` as degree. Dimensions are
/// checked by the caller.
pub(crate) fn det_pencil_modular(c0: &IntMatrix, c1: &IntMatrix, c2: &IntMatrix, deg: usize) -> IntPoly {
    let n = c0.rows();
    if n == 0 {
        return IntPoly::one();
    }
    let bound = coefficient_bound([c0, c1, c2], n);
    if bound.is_zero() {
        return IntPoly::zero();
    }
    let chosen = choose_primes(&bound);
    let residues: Vec<Vec<u64>> = chosen
        .par_iter()
        .map(|&p| {
            let res = [c0, c1, c2].map(|m| m.entries().iter().map(|x| residue(x, p)).collect::<Vec<_>>());
            pencil_mod(&res, n, deg, p)
        })
        .collect();
    crt_lift(&chosen, &residues, deg + 1)
}

/// Reduces `a` to upper Hessenberg form by similarity, then runs the
/// usual recurrence. Returns `det(x I - a)` modulo `p`, ascending.
fn char_poly_mod(mut a: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| a[i * n + j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for k in 0..n {
                a.swap(piv * n + k, (j + 1) * n + k);
            }
            for k in 0..n {
                a.swap(k * n + piv, k * n + j + 1);
            }
        }
        let inv = inv_mod(a[(j + 1) * n + j], p);
        for i in j + 2..n {
            let f = a[i * n + j] * inv % p;
            if f == 0 {
                continue;
            }
            // row_i -= f row_{j+1}, then col_{j+1} += f col_i
            for k in 0..n {
                let sub = f * a[(j + 1) * n + k] % p;
                a[i * n + k] = (a[i * n + k] + p - sub) % p;
            }
            for k in 0..n {
                let add = f * a[k * n + i] % p;
                a[k * n + j + 1] = (a[k * n + j + 1] + add) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let h = a[(k - 1) * n + k - 1];
        let mut next = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - h * c % p) % p;
        }
        let mut t = 1u64;
        for i in (1..k).rev() {
            t = t * a[i * n + i - 1] % p;
            if t == 0 {
                break;
            }
            let coef = a[(i - 1) * n + k - 1] * t % p;
            for (idx, &c) in polys[i - 1].iter().enumerate() {
                next[idx] = (next[idx] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

/// `det(x I - m)` for square `m`.
pub(crate) fn char_poly_modular(m: &IntMatrix) -> IntPoly {
    let n = m.rows();
    if n == 0 {
        return IntPoly::one();
    }
    let neg = -m;
    let bound = coefficient_bound([&neg, &IntMatrix::identity(n), &IntMatrix::zeros(n, n)], n);
    let chosen = choose_primes(&bound);
    let residues: Vec<Vec<u64>> = chosen
        .par_iter()
        .map(|&p| char_poly_mod(m.entries().iter().map(|x| residue(x, p)).collect(), n, p))
        .collect();
    crt_lift(&chosen, &residues, n + 1)
}

/// Primes whose product exceeds twice `bound`.
fn choose_primes(bound: &BigInt) -> Vec<u64> {
    let target = bound * 2u32;
    let mut chosen = Vec::new();
    let mut modulus = BigInt::one();
    for p in primes() {
        chosen.push(p);
        modulus *= p;
        if modulus > target {
            break;
        }
    }
    chosen
}

/// Garner-style incremental CRT followed by the symmetric lift.
fn crt_lift(chosen: &[u64], residues: &[Vec<u64>], len: usize) -> IntPoly {
    let mut coeffs: Vec<BigInt> = vec![BigInt::zero(); len];
    let mut m = BigInt::one();
    for (&p, r) in chosen.iter().zip(residues) {
        let m_inv = inv_mod(residue(&m, p), p);
        for (c, &rp) in coeffs.iter_mut().zip(r) {
            let cur = residue(c, p);
            let t = (rp + p - cur) % p * m_inv % p;
            *c += &m * t;
        }
        m *= p;
    }
    let half = &m >> 1;
    for c in &mut coeffs {
        if *c > half {
            *c -= &m;
        }
    }
    debug_assert!(coeffs.iter().all(|c| c.sign() != Sign::Minus || c.abs() <= half));
    IntPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_descend_from_two_to_the_31() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert_eq!(ps, vec![2147483647, 2147483629, 2147483587]);
    }

    #[test]
    fn hessenberg_char_poly() {
        // [[2,1,0],[1,3,1],[0,1,4]]: x^3 - 9x^2 + 24x - 18
        let p = 101;
        let got = char_poly_mod(vec![2, 1, 0, 1, 3, 1, 0, 1, 4], 3, p);
        assert_eq!(got, vec![p - 18, 24, p - 9, 1]);
        // a zero in the subdiagonal forces the pivot search
        let got = char_poly_mod(vec![0, 0, 1, 0, 0, 0, 1, 0, 0], 3, p);
        assert_eq!(got, vec![0, p - 1, 0, 1]);
    }

    #[test]
    fn det_mod_small() {
        // det [[2,1],[1,3]] = 5
        assert_eq!(det_mod(vec![2, 1, 1, 3], 2, 7), 5);
        assert_eq!(det_mod(vec![0, 1, 1, 0], 2, 7), 6);
    }
}
