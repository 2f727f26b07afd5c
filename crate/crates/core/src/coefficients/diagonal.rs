//! Diagonals of the coefficient table and the quadratic that governs their signs.
//!
//! For `j >= 1` the even-diagonal coefficient factors as
//!
//! ```text
//! c_{l-j,l+j} = C(n-2l+2j, i-l+j) C(n-2l-2j, i-l-j) (A j^2 + B)
//!               / ((n-l+j-i+1)(i-l-j+1)(i-l+j+1)(n-l-j-i+1))
//! ```
//!
//! with `A`, `B` independent of `j`. The odd diagonal `c_{l-1-j,l+j}` is the
//! same identity with `l -> l - 1/2`, `j -> j + 1/2`; scaling by 4 keeps it
//! integral:
//!
//! ```text
//! c_{l-1-j,l+j} = C(n-2l+2+2j, i-l+1+j) C(n-2l-2j, i-l-j) (A' (2j+1)^2 + B')
//!                 / (4 (n-l+j-i+2)(i-l-j+1)(i-l+j+2)(n-l-j-i+1))
//! ```
//!
//! where `A' = A - 2` and `B' = 4 B(l - 1/2)`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_with::{serde_as, DisplayFromStr};

use super::c_unchecked;
use crate::arith::{binomial, rat, BigRat};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// Index sum `2l`: `(c_{l,l}, c_{l-1,l+1}, ...)`.
    Even,
    /// Index sum `2l - 1`: `(c_{l-1,l}, c_{l-2,l+1}, ...)`.
    Odd,
}

impl Parity {
    /// `(j, k)` of the `t`-th entry of the diagonal.
    fn pair(self, ell: i64, t: i64) -> (i64, i64) {
        match self {
            Parity::Even => (ell - t, ell + t),
            Parity::Odd => (ell - 1 - t, ell + t),
        }
    }
}

fn check_lemma_range(n: i64, i: i64, ell: i64) -> Result<()> {
    if n < 1 || i < 0 || 2 * i > n || ell < 1 || 2 * ell > i + 1 {
        return Err(Error::range(format!(
            "need n >= 1, 0 <= i <= n/2 and 1 <= l <= (i+1)/2, got n={n}, i={i}, l={ell}"
        )));
    }
    Ok(())
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalSequence {
    pub n: i64,
    pub i: i64,
    pub ell: i64,
    pub parity: Parity,
    pub pairs: Vec<(usize, usize)>,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub values: Vec<BigInt>,
}

impl DiagonalSequence {
    pub fn first_negative(&self) -> Option<usize> {
        self.values.iter().position(|v| v.is_negative())
    }

    /// After the first strictly negative entry every entry is `<= 0`.
    pub fn tail_sign_ok(&self) -> bool {
        match self.first_negative() {
            Some(t) => self.values[t..].iter().all(|v| !v.is_positive()),
            None => true,
        }
    }

    pub fn sum(&self) -> BigInt {
        self.values.iter().sum()
    }
}

/// Coefficients with index sum `2l` (even) or `2l - 1` (odd), by increasing
/// spread, stopping at `k = ⌊n/2⌋` or `j = 0`.
pub fn diagonal(n: i64, i: i64, ell: i64, parity: Parity) -> Result<DiagonalSequence> {
    check_lemma_range(n, i, ell)?;
    if i < 1 {
        return Err(Error::range("coefficients need i >= 1"));
    }
    let half = n / 2;
    let mut pairs = Vec::new();
    let mut values = Vec::new();
    for t in 0.. {
        let (j, k) = parity.pair(ell, t);
        if j < 0 || k > half {
            break;
        }
        pairs.push((j as usize, k as usize));
        values.push(c_unchecked(n, i, j, k));
    }
    Ok(DiagonalSequence {
        n,
        i,
        ell,
        parity,
        pairs,
        values,
    })
}

/// `A q + B` where `q = j^2` (even) or `q = (2j+1)^2` (odd).
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticAB {
    pub parity: Parity,
    #[serde_as(as = "DisplayFromStr")]
    pub a: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub b: BigInt,
}

impl QuadraticAB {
    pub fn eval(&self, j: i64) -> BigInt {
        let q = match self.parity {
            Parity::Even => j * j,
            Parity::Odd => (2 * j + 1) * (2 * j + 1),
        };
        &self.a * q + &self.b
    }
}

pub fn a_expanded(n: i64, i: i64, ell: i64) -> BigInt {
    let (n, i, l) = (BigInt::from(n), BigInt::from(i), BigInt::from(ell));
    -4 * &n * &n + 16 * &n * &i - 16 * &i * &i - 2 * &n + 4 * &l - 2
}

pub fn a_factored(n: i64, i: i64, ell: i64) -> BigInt {
    let d = BigInt::from(n - 2 * i);
    -4 * &d * &d - 2 * BigInt::from(n - 2 * ell) - 2
}

/// `B` as a polynomial in `n, i, l`; `l` may be a half-integer.
pub fn b_transcribed(n: &BigRat, i: &BigRat, l: &BigRat) -> BigRat {
    let two = rat(2);
    let c = |k: i64| rat(k);
    let (n2, i2, l2) = (n * n, i * i, l * l);
    &two * &n2 * i - &two * n * &i2 - &two * &n2 * l - c(4) * n * i * l + c(4) * &i2 * l
        + c(6) * n * &l2
        - c(4) * &l2 * l
        + &two * &n2
        + &two * n * i
        - &two * &i2
        - c(10) * n * l
        + c(10) * &l2
        + c(4) * n
        - c(8) * l
        + two
}

/// `B` recovered from the `j = 0` value of the off-diagonal formula,
/// `2 (C(m,a)^2 - C(m,a-1) C(m,a+1))` with `m = n-2l`, `a = i-l`, divided by
/// its cofactor `C(m,a)^2 / ((n-l-i+1)^2 (i-l+1)^2)`.
pub fn b_from_defining(n: i64, i: i64, ell: i64) -> Result<BigRat> {
    let (m, a) = (n - 2 * ell, i - ell);
    let center = binomial(m, a);
    if center.is_zero() {
        return Err(Error::range(format!("C({m},{a}) vanishes")));
    }
    let value = BigInt::from(2) * (&center * &center - binomial(m, a - 1) * binomial(m, a + 1));
    let d1 = BigInt::from(n - ell - i + 1);
    let d2 = BigInt::from(i - ell + 1);
    let den = &d1 * &d1 * &d2 * &d2;
    Ok(BigRat::new(value * den, &center * &center))
}

/// Even-diagonal quadratic. Both forms of `A` and both routes to `B` are
/// evaluated and must agree.
pub fn quadratic_ab(n: i64, i: i64, ell: i64) -> Result<QuadraticAB> {
    check_lemma_range(n, i, ell)?;
    let a = a_expanded(n, i, ell);
    let a2 = a_factored(n, i, ell);
    if a != a2 {
        return Err(Error::Internal(format!("A: expanded {a} != factored {a2}")));
    }
    let b = b_transcribed(&rat(n), &rat(i), &rat(ell));
    let b2 = b_from_defining(n, i, ell)?;
    if b != b2 || !b.is_integer() {
        return Err(Error::Internal(format!("B: polynomial {b} != j=0 route {b2}")));
    }
    Ok(QuadraticAB {
        parity: Parity::Even,
        a,
        b: b.to_integer(),
    })
}

/// Odd-diagonal quadratic in `2j + 1`. `B'` is checked against the even
/// polynomial evaluated at `l - 1/2`.
pub fn quadratic_ab_odd(n: i64, i: i64, ell: i64) -> Result<QuadraticAB> {
    check_lemma_range(n, i, ell)?;
    let a = a_factored(n, i, ell) - 2;
    let (nb, ib, lb) = (BigInt::from(n), BigInt::from(i), BigInt::from(ell));
    let b: BigInt = 16 * &ib * &ib * &lb - 8 * &ib * &ib * &nb - 16 * &ib * &ib - 16 * &ib * &lb * &nb
        + 8 * &ib * &nb * &nb
        + 16 * &ib * &nb
        - 16 * &lb * &lb * &lb
        + 24 * &lb * &lb * &nb
        + 64 * &lb * &lb
        - 8 * &lb * &nb * &nb
        - 64 * &lb * &nb
        - 84 * &lb
        + 12 * &nb * &nb
        + 42 * &nb
        + 36;
    let half_shift = rat(ell) - BigRat::new(1.into(), 2.into());
    let b2 = rat(4) * b_transcribed(&rat(n), &rat(i), &half_shift);
    if BigRat::from_integer(b.clone()) != b2 {
        return Err(Error::Internal(format!("B': polynomial {b} != shifted route {b2}")));
    }
    Ok(QuadraticAB {
        parity: Parity::Odd,
        a,
        b,
    })
}

/// Both sides of the factorisation at one point of a diagonal.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub pair: (usize, usize),
    #[serde_as(as = "DisplayFromStr")]
    pub coefficient: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub closed_form: BigRat,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        BigRat::from_integer(self.coefficient.clone()) == self.closed_form
    }
}

fn check_diagonal_point(n: i64, i: i64, ell: i64, j: i64, parity: Parity) -> Result<(i64, i64)> {
    check_lemma_range(n, i, ell)?;
    let min_j = match parity {
        Parity::Even => 1,
        Parity::Odd => 0,
    };
    let (lo, hi) = parity.pair(ell, j);
    if j < min_j || lo < 0 {
        return Err(Error::range(format!(
            "diagonal offset j={j} outside {min_j}..={}",
            parity.pair(ell, 0).0
        )));
    }
    Ok((lo, hi))
}

fn denominator_factors(n: i64, i: i64, l: i64, j: i64, parity: Parity) -> [(&'static str, i64); 4] {
    match parity {
        Parity::Even => [
            ("n-l+j-i+1", n - l + j - i + 1),
            ("i-l-j+1", i - l - j + 1),
            ("i-l+j+1", i - l + j + 1),
            ("n-l-j-i+1", n - l - j - i + 1),
        ],
        Parity::Odd => [
            ("n-l+j-i+2", n - l + j - i + 2),
            ("i-l-j+1", i - l - j + 1),
            ("i-l+j+2", i - l + j + 2),
            ("n-l-j-i+1", n - l - j - i + 1),
        ],
    }
}

/// Compares `c` at offset `j` of the diagonal with the factorised rational
/// expression. Fails with [`Error::DegenerateFactor`] when a denominator
/// factor is not positive; those points are covered by [`degenerate_case_check`].
pub fn rational_identity_check(n: i64, i: i64, ell: i64, j: i64, parity: Parity) -> Result<IdentityCheck> {
    let (lo, hi) = check_diagonal_point(n, i, ell, j, parity)?;
    let factors = denominator_factors(n, i, ell, j, parity);
    if let Some(&(factor, value)) = factors.iter().find(|(_, v)| *v <= 0) {
        return Err(Error::DegenerateFactor { factor, value });
    }
    let quad = match parity {
        Parity::Even => quadratic_ab(n, i, ell)?,
        Parity::Odd => quadratic_ab_odd(n, i, ell)?,
    };
    let mut den: BigInt = factors.iter().map(|&(_, v)| BigInt::from(v)).product();
    if parity == Parity::Odd {
        den *= 4;
    }
    let prefactor = binomial(n - 2 * lo, i - lo) * binomial(n - 2 * hi, i - hi);
    let closed_form = BigRat::new(prefactor * quad.eval(j), den);
    Ok(IdentityCheck {
        pair: (lo as usize, hi as usize),
        coefficient: c_unchecked(n, i, lo, hi),
        closed_form,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DegenerateCase {
    /// `k > i + 1`, or `k = i + 1 > ⌊n/2⌋`: the coefficient vanishes.
    Zero,
    /// `k = i + 1 <= ⌊n/2⌋`: the coefficient is strictly negative.
    Negative,
}

/// At a point where the factorisation degenerates (`k >= i + 1`), returns the
/// expected sign class and whether the coefficient has it.
pub fn degenerate_case_check(n: i64, i: i64, ell: i64, j: i64, parity: Parity) -> Result<(DegenerateCase, bool)> {
    let (lo, hi) = check_diagonal_point(n, i, ell, j, parity)?;
    if hi < i + 1 {
        return Err(Error::range(format!("k = {hi} < i + 1: factorisation is not degenerate")));
    }
    let c = c_unchecked(n, i, lo, hi);
    let case = if hi == i + 1 && hi <= n / 2 {
        DegenerateCase::Negative
    } else {
        DegenerateCase::Zero
    };
    let ok = match case {
        DegenerateCase::Zero => c.is_zero(),
        DegenerateCase::Negative => c.is_negative(),
    };
    Ok((case, ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn diagonal_examples() {
        let d = diagonal(16, 5, 3, Parity::Even).unwrap();
        assert_eq!(ints(&d.values), vec![825, 1177, -182, -1820]);
        assert!(d.tail_sign_ok());
        assert_eq!(d.first_negative(), Some(2));
        assert_eq!(ints(&diagonal(6, 2, 1, Parity::Even).unwrap().values), vec![10, 18]);
        let d = diagonal(8, 3, 2, Parity::Even).unwrap();
        assert_eq!(d.pairs, vec![(2, 2), (1, 3), (0, 4)]);
        assert_eq!(ints(&d.values), vec![10, 18, -28]);
        let d = diagonal(8, 3, 2, Parity::Odd).unwrap();
        assert_eq!(d.pairs, vec![(1, 2), (0, 3)]);
        assert_eq!(ints(&d.values), vec![64, 56]);
    }

    #[test]
    fn diagonal_range() {
        assert!(diagonal(16, 5, 4, Parity::Even).is_err());
        assert!(diagonal(16, 9, 1, Parity::Even).is_err());
        assert!(diagonal(16, 5, 0, Parity::Odd).is_err());
    }

    #[test]
    fn tail_sign_detects_violation() {
        let d = DiagonalSequence {
            n: 0,
            i: 0,
            ell: 0,
            parity: Parity::Even,
            pairs: vec![],
            values: vec![3.into(), (-1).into(), 2.into()],
        };
        assert!(!d.tail_sign_ok());
    }

    #[test]
    fn quadratic_examples() {
        let q = quadratic_ab(6, 3, 1).unwrap();
        assert_eq!(q.a, BigInt::from(-10));
        assert_eq!(a_expanded(6, 3, 1), BigInt::from(-10));
        assert!(q.b.is_positive());
        assert!(quadratic_ab(6, 4, 1).is_err());
        assert!(quadratic_ab(6, 2, 2).is_err());
    }

    #[test]
    fn identity_examples() {
        let chk = rational_identity_check(16, 5, 3, 1, Parity::Even).unwrap();
        assert!(chk.holds());
        assert_eq!(chk.coefficient, BigInt::from(1177));
        let chk = rational_identity_check(6, 2, 1, 1, Parity::Even).unwrap();
        assert!(chk.holds());
        assert_eq!(chk.coefficient, BigInt::from(18));
        // c_{0,6} sits on the k = i + 1 carve-out
        assert_eq!(
            rational_identity_check(16, 5, 3, 3, Parity::Even),
            Err(Error::DegenerateFactor {
                factor: "i-l-j+1",
                value: 0
            })
        );
        assert_eq!(
            degenerate_case_check(16, 5, 3, 3, Parity::Even).unwrap(),
            (DegenerateCase::Negative, true)
        );
        assert!(rational_identity_check(16, 5, 3, 0, Parity::Even).is_err());
        assert!(degenerate_case_check(16, 5, 3, 1, Parity::Even).is_err());
    }

    #[test]
    fn identity_and_signs_exhaustive_small() {
        for n in 2..=24 {
            for i in 1..=n / 2 {
                for ell in 1..=(i + 1) / 2 {
                    for parity in [Parity::Even, Parity::Odd] {
                        let quad = match parity {
                            Parity::Even => quadratic_ab(n, i, ell).unwrap(),
                            Parity::Odd => quadratic_ab_odd(n, i, ell).unwrap(),
                        };
                        assert!(quad.a.is_negative());
                        let start = if parity == Parity::Even { 1 } else { 0 };
                        let last = parity.pair(ell, 0).0;
                        for j in start..=last {
                            match rational_identity_check(n, i, ell, j, parity) {
                                Ok(chk) => {
                                    assert!(chk.holds(), "n={n} i={i} l={ell} j={j} {parity:?}");
                                    assert_eq!(
                                        chk.coefficient.sign(),
                                        quad.eval(j).sign(),
                                        "n={n} i={i} l={ell} j={j} {parity:?}"
                                    );
                                }
                                Err(Error::DegenerateFactor { .. }) => {
                                    let (_, ok) = degenerate_case_check(n, i, ell, j, parity).unwrap();
                                    assert!(ok, "n={n} i={i} l={ell} j={j} {parity:?}");
                                }
                                Err(e) => panic!("{e}"),
                            }
                        }
                    }
                }
            }
        }
    }
}
