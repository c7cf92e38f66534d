//! Polynomials over Q with Sturm-sequence root counting and real-root
//! isolation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

/// Half-open interval `(lo, hi]` holding exactly one real root. When the
/// root is rational it is stored with `lo == hi` and `exact` set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: bool,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        ((&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "({}, {}]", self.lo, self.hi)
        }
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        Self::new(p.coeffs().iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (RatPoly::new(Vec::new()), self.clone());
        };
        let mut quot = vec![Rational::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree decomposition (Yun): factors `f_1, f_2, ...` with
    /// `self = c * prod f_i^i`, each `f_i` monic and squarefree. Constant
    /// factors are omitted; the index in the result is the multiplicity.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, RatPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a.clone()));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Squarefree part: product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> RatPoly {
        if self.degree().unwrap_or(0) == 0 {
            return RatPoly::new(vec![Rational::one()]);
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Canonical Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<RatPoly> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let mut next = self.derivative();
        while !next.is_zero() {
            seq.push(next.clone());
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            next = -&r;
        }
        seq
    }

    /// Number of distinct real roots in `(a, b]`; `None` stands for an
    /// infinite endpoint.
    pub fn count_roots(&self, a: Option<&Rational>, b: Option<&Rational>) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = self.sqfree_sturm();
        let va = sign_changes_at(&seq, a, false);
        let vb = sign_changes_at(&seq, b, true);
        va.saturating_sub(vb)
    }

    fn sqfree_sturm(&self) -> Vec<RatPoly> {
        self.squarefree_part().sturm_sequence()
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        self.count_roots(None, None)
    }

    /// Cauchy bound: every root has modulus strictly below the result.
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let n = self.coeffs.len();
        let max = self.coeffs[..n.saturating_sub(1)]
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Rational::zero(), |m, x| if x > m { x } else { m });
        max + Rational::one()
    }

    /// Isolating intervals for the distinct real roots, in increasing order,
    /// each refined to width at most `max_width`. Rational roots found during
    /// bisection are reported exactly.
    pub fn isolate_real_roots(&self, max_width: &Rational) -> Vec<RootInterval> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sf = self.squarefree_part();
        let seq = sf.sturm_sequence();
        let bound = sf.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        let two = Rational::from_integer(BigInt::from(2));
        while let Some((lo, hi)) = stack.pop() {
            let n = sign_changes_at(&seq, Some(&lo), false)
                .saturating_sub(sign_changes_at(&seq, Some(&hi), true));
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(refine(&sf, &seq, lo, hi, max_width));
                continue;
            }
            let mid = (&lo + &hi) / &two;
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }
}

fn refine(
    sf: &RatPoly,
    seq: &[RatPoly],
    mut lo: Rational,
    mut hi: Rational,
    max_width: &Rational,
) -> RootInterval {
    let two = Rational::from_integer(BigInt::from(2));
    loop {
        if sf.eval(&hi).is_zero() {
            return RootInterval {
                lo: hi.clone(),
                hi,
                exact: true,
            };
        }
        if &(&hi - &lo) <= max_width {
            let simple = simplest_rational_in(&lo, &hi);
            if simple > lo && sf.eval(&simple).is_zero() {
                return RootInterval {
                    lo: simple.clone(),
                    hi: simple,
                    exact: true,
                };
            }
            return RootInterval {
                lo,
                hi,
                exact: false,
            };
        }
        let mid = (&lo + &hi) / &two;
        let left = sign_changes_at(seq, Some(&lo), false)
            .saturating_sub(sign_changes_at(seq, Some(&mid), true));
        if left == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Rational with the smallest denominator in `[lo, hi]`.
fn simplest_rational_in(lo: &Rational, hi: &Rational) -> Rational {
    if lo.is_positive() {
        let fl = lo.floor();
        if &fl == lo {
            return fl;
        }
        let next = &fl + Rational::one();
        if &next <= hi {
            return next;
        }
        let inner = simplest_rational_in(&(hi - &fl).recip(), &(lo - &fl).recip());
        fl + inner.recip()
    } else if hi.is_negative() {
        -simplest_rational_in(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

/// Sign changes of the sequence at `x`; `None` means `+inf` when `at_plus`
/// holds, `-inf` otherwise.
fn sign_changes_at(seq: &[RatPoly], x: Option<&Rational>, at_plus: bool) -> usize {
    let signs = seq.iter().map(|p| match x {
        Some(x) => sign(&p.eval(x)),
        None => {
            let s = sign(&p.leading());
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !at_plus && odd {
                -s
            } else {
                s
            }
        }
    });
    let mut changes = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl std::ops::Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    a - b
                })
                .collect(),
        )
    }
}

impl std::ops::Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "RatPoly[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn p(xs: &[i64]) -> RatPoly {
        RatPoly::from_int(&IntPoly::from_i64s(xs))
    }

    #[test]
    fn counts_roots_of_triangle_char_poly() {
        // x^3 - 3x - 2 = (x - 2)(x + 1)^2: distinct roots -1, 2
        let f = p(&[-2, -3, 0, 1]);
        assert_eq!(f.count_real_roots(), 2);
        assert_eq!(f.count_roots(None, Some(&r(0))), 1);
        assert_eq!(f.count_roots(Some(&r(-1)), Some(&r(2))), 1); // (-1, 2] holds 2 only
        assert_eq!(f.count_roots(Some(&r(-2)), Some(&r(-1))), 1);
    }

    #[test]
    fn no_real_roots() {
        assert_eq!(p(&[1, 0, 1]).count_real_roots(), 0);
        assert_eq!(p(&[1, 1, 2]).count_real_roots(), 0);
    }

    #[test]
    fn yun_decomposition() {
        // (x - 1)^3 (x + 2)
        let f = RatPoly::from_int(&(&IntPoly::linear(-1, 1).pow(3) * &IntPoly::linear(2, 1)));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (1, p(&[2, 1])));
        assert_eq!(dec[1], (3, p(&[-1, 1])));
    }

    #[test]
    fn isolation_separates_close_roots() {
        // x^2 - 2 and x - 7/5 interleaved: roots -sqrt2, 7/5, sqrt2
        let f = RatPoly::from_int(&(&IntPoly::from_i64s(&[-2, 0, 1]) * &IntPoly::linear(-7, 5)));
        let roots = f.isolate_real_roots(&Rational::new(BigInt::from(1), BigInt::from(1000)));
        assert_eq!(roots.len(), 3);
        assert!((roots[0].midpoint_f64() + 2f64.sqrt()).abs() < 1e-3);
        assert!(roots[1].exact && roots[1].lo == Rational::new(BigInt::from(7), BigInt::from(5)));
        assert!((roots[2].midpoint_f64() - 2f64.sqrt()).abs() < 1e-3);
    }
}
