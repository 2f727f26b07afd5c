//! The quadratic form `h_i^2 - h_{i-1} h_{i+1} = Σ_{j ≤ k} c_jk^(i) γ_j γ_k`.
//!
//! [`c_coeff`] evaluates the closed binomial formula; [`c_coeff_oracle`]
//! recomputes the same number by expanding the basis polynomials and
//! multiplying the resulting rows out, without going through [`binomial`].

mod abel;
mod diagonal;
mod render;

pub use abel::{abel_sum_check, AbelTrace};
pub use diagonal::{
    degenerate_case_check, diagonal, quadratic_ab, quadratic_ab_odd, rational_identity_check,
    DegenerateCase, DiagonalSequence, IdentityCheck, Parity, QuadraticAB,
};
pub use render::{RegroupTerm, RegroupedDiagonal};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{binomial, BigRat};
use crate::error::{Error, Result};

fn check_index(n: i64, i: i64) -> Result<()> {
    if n < 2 || i < 1 || i > n - 1 {
        return Err(Error::range(format!("need n >= 2 and 1 <= i <= n-1, got n={n}, i={i}")));
    }
    Ok(())
}

fn check_pair(n: i64, i: i64, j: i64, k: i64) -> Result<()> {
    check_index(n, i)?;
    if j < 0 || j > k {
        return Err(Error::range(format!("need 0 <= j <= k, got j={j}, k={k}")));
    }
    Ok(())
}

/// Closed form of the coefficient of `γ_j γ_k` (`j <= k`) in `h_i^2 - h_{i-1} h_{i+1}`.
/// Zero whenever `k > i + 1` or `k > ⌊n/2⌋`.
pub fn c_coeff(n: i64, i: i64, j: i64, k: i64) -> Result<BigInt> {
    check_pair(n, i, j, k)?;
    Ok(c_unchecked(n, i, j, k))
}

pub(crate) fn c_unchecked(n: i64, i: i64, j: i64, k: i64) -> BigInt {
    let b = |m: i64, a: i64| binomial(m, a);
    if j == k {
        let m = n - 2 * j;
        let mid = b(m, i - j);
        &mid * &mid - b(m, i - j - 1) * b(m, i - j + 1)
    } else {
        let (mj, mk) = (n - 2 * j, n - 2 * k);
        BigInt::from(2) * b(mj, i - j) * b(mk, i - k)
            - b(mj, i - j - 1) * b(mk, i - k + 1)
            - b(mj, i - j + 1) * b(mk, i - k - 1)
    }
}

/// Rows `[x^t] x^j (1+x)^(n-2j)` for `j = 0..=⌊n/2⌋`, built by repeated
/// multiplication with `1 + x`.
fn basis_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..=n / 2)
        .map(|j| {
            let mut poly = vec![BigInt::zero(); n + 1];
            poly[j] = BigInt::one();
            for _ in 0..n - 2 * j {
                for t in (1..=n).rev() {
                    let prev = poly[t - 1].clone();
                    poly[t] += prev;
                }
            }
            poly
        })
        .collect()
}

/// Brute force: builds `h_{i-1}, h_i, h_{i+1}` as linear forms in the γ's,
/// expands `h_i h_i - h_{i-1} h_{i+1}` into a full matrix over ordered pairs
/// and folds it onto `j <= k`.
pub fn c_coeff_oracle(n: i64, i: i64, j: i64, k: i64) -> Result<BigInt> {
    check_pair(n, i, j, k)?;
    let half = (n / 2) as usize;
    let (j, k) = (j as usize, k as usize);
    if k > half {
        return Ok(BigInt::zero());
    }
    let rows = basis_rows(n as usize);
    let form = |t: usize| -> Vec<BigInt> { rows.iter().map(|poly| poly[t].clone()).collect() };
    let i = i as usize;
    let (lo, mid, hi) = (form(i - 1), form(i), form(i + 1));
    let entry = |a: usize, b: usize| &mid[a] * &mid[b] - &lo[a] * &hi[b];
    Ok(if j == k {
        entry(j, j)
    } else {
        entry(j, k) + entry(k, j)
    })
}

/// All coefficients `c_jk^(i)` for `0 <= j <= k <= ⌊n/2⌋`, zeros included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    n: i64,
    i: i64,
    entries: BTreeMap<(usize, usize), BigInt>,
}

pub fn coeff_table(n: i64, i: i64) -> Result<CoeffTable> {
    check_index(n, i)?;
    let half = (n / 2) as usize;
    let mut entries = BTreeMap::new();
    for k in 0..=half {
        for j in 0..=k {
            entries.insert((j, k), c_unchecked(n, i, j as i64, k as i64));
        }
    }
    Ok(CoeffTable { n, i, entries })
}

impl CoeffTable {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    /// Number of γ variables, `⌊n/2⌋ + 1`.
    pub fn gamma_len(&self) -> usize {
        (self.n / 2) as usize + 1
    }

    /// Order of the indices does not matter; pairs outside the table are zero.
    pub fn get(&self, j: usize, k: usize) -> BigInt {
        let key = if j <= k { (j, k) } else { (k, j) };
        self.entries.get(&key).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(j, k), c)| (j, k, c))
    }

    /// Pairs with index sum `s`, ordered by increasing spread `k - j`.
    pub fn anti_diagonal(&self, s: usize) -> Vec<(usize, usize, BigInt)> {
        let half = self.gamma_len() - 1;
        let mut out = Vec::new();
        let mut j = s / 2;
        loop {
            let k = s - j;
            if k <= half {
                out.push((j, k, self.get(j, k)));
            }
            if j == 0 {
                break;
            }
            j -= 1;
        }
        out
    }

    /// `Σ_{j <= k} c_jk γ_j γ_k`.
    pub fn evaluate(&self, gamma: &[BigRat]) -> Result<BigRat> {
        if gamma.len() != self.gamma_len() {
            return Err(Error::Length {
                expected: self.gamma_len(),
                found: gamma.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .fold(BigRat::zero(), |acc, (&(j, k), c)| {
                acc + BigRat::from_integer(c.clone()) * &gamma[j] * &gamma[k]
            }))
    }

    pub fn to_json(&self) -> CoeffTableJson {
        CoeffTableJson {
            n: self.n,
            i: self.i,
            entries: self
                .entries
                .iter()
                .map(|(&(j, k), c)| (j, k, c.to_string()))
                .collect(),
        }
    }
}

/// `{"n": .., "i": .., "entries": [[j, k, "c"], ...]}`
#[derive(Debug, Clone, Serialize)]
pub struct CoeffTableJson {
    pub n: i64,
    pub i: i64,
    pub entries: Vec<(usize, usize, String)>,
}

/// Coefficient of `u^r` in `h_i^2 - h_{i-1} h_{i+1}` after `γ_j = u^j`.
///
/// Table entries are stored once per unordered pair and `c_jk` for `j < k`
/// already carries the factor 2 of the ordered expansion, so the sum runs
/// over `j <= k` only.
pub fn r_sum(n: i64, i: i64, r: i64) -> Result<BigInt> {
    if n < 2 || i < 1 || i > n / 2 || r < 0 {
        return Err(Error::range(format!(
            "need 1 <= i <= floor(n/2) and r >= 0, got n={n}, i={i}, r={r}"
        )));
    }
    let half = n / 2;
    Ok((0..=r / 2)
        .filter(|j| r - j <= half)
        .map(|j| c_unchecked(n, i, j, r - j))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::poly::{gamma_to_h, GammaVector};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(c_coeff(6, 1, 0, 0).unwrap(), big(21));
        assert_eq!(c_coeff(6, 1, 0, 2).unwrap(), big(-1));
        assert_eq!(c_coeff(16, 5, 1, 5).unwrap(), big(-182));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(c_coeff_oracle(6, 2, 1, 1).unwrap(), big(10));
        assert_eq!(c_coeff_oracle(8, 3, 0, 4).unwrap(), big(-28));
        assert_eq!(c_coeff_oracle(6, 3, 3, 3).unwrap(), big(1));
    }

    #[test]
    fn range_errors() {
        assert!(c_coeff(1, 1, 0, 0).is_err());
        assert!(c_coeff(6, 0, 0, 0).is_err());
        assert!(c_coeff(6, 6, 0, 0).is_err());
        assert!(c_coeff(6, 2, 2, 1).is_err());
        assert!(c_coeff(6, 2, -1, 1).is_err());
        assert!(coeff_table(6, 6).is_err());
        assert!(r_sum(6, 4, 0).is_err());
        assert!(r_sum(6, 2, -1).is_err());
    }

    #[test]
    fn vanishes_beyond_i_plus_one() {
        for n in 2..=14 {
            for i in 1..n {
                for k in i + 2..=n / 2 {
                    for j in 0..=k {
                        assert!(c_coeff(n, i, j, k).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn table_reproduces_quadratic_form() {
        for n in 2..=9usize {
            let len = n / 2 + 1;
            for code in 0..4usize.pow(len as u32) {
                let mut c = code;
                let g: Vec<BigRat> = (0..len)
                    .map(|_| {
                        let d = (c % 4) as i64 - 1;
                        c /= 4;
                        rat(d)
                    })
                    .collect();
                let h = gamma_to_h(&GammaVector::new(n, g.clone()).unwrap());
                let h = h.coeffs();
                for i in 1..n {
                    let t = coeff_table(n as i64, i as i64).unwrap();
                    let direct = &h[i] * &h[i] - &h[i - 1] * &h[i + 1];
                    assert_eq!(t.evaluate(&g).unwrap(), direct, "n={n} i={i}");
                }
            }
        }
    }

    /// Ordered double sum over (j, k) with j + k = r, as in the generating
    /// function expansion with γ_j = u^j.
    fn ordered_r_sum(n: i64, i: i64, r: i64) -> BigInt {
        let mut total = BigInt::zero();
        for j in 0..=i {
            let k = r - j;
            if (0..=i).contains(&k) {
                total += binomial(n - 2 * j, i - j) * binomial(n - 2 * k, i - k);
            }
        }
        for j in 0..=i + 1 {
            let k = r - j;
            if (0..=i + 1).contains(&k) {
                total -= binomial(n - 2 * j, i - 1 - j) * binomial(n - 2 * k, i + 1 - k);
            }
        }
        total
    }

    #[test]
    fn r_sum_conventions_agree() {
        // c_11 + c_02 at n = 6, i = 2
        assert_eq!(r_sum(6, 2, 2).unwrap(), big(28));
        assert_eq!(ordered_r_sum(6, 2, 2), big(28));
        assert_eq!(r_sum(16, 5, 6).unwrap(), big(0));
        assert_eq!(r_sum(6, 1, 3).unwrap(), big(0));
        for n in 2..=16 {
            for i in 1..=n / 2 {
                for r in 0..=2 * i + 2 {
                    assert_eq!(r_sum(n, i, r).unwrap(), ordered_r_sum(n, i, r), "n={n} i={i} r={r}");
                }
            }
        }
    }

    #[test]
    fn mirrored_index_gives_same_table() {
        for n in 2..=16 {
            for i in 1..n {
                let a = coeff_table(n, i).unwrap();
                let b = coeff_table(n, n - i).unwrap();
                assert_eq!(a.entries, b.entries, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn anti_diagonal_order() {
        let t = coeff_table(16, 5).unwrap();
        let row: Vec<(usize, usize, i64)> = t
            .anti_diagonal(6)
            .into_iter()
            .map(|(j, k, c)| (j, k, c.try_into().unwrap()))
            .collect();
        assert_eq!(row, vec![(3, 3, 825), (2, 4, 1177), (1, 5, -182), (0, 6, -1820)]);
        // k is capped at floor(n/2)
        let t = coeff_table(8, 3).unwrap();
        assert_eq!(t.anti_diagonal(6).len(), 2);
    }

    #[test]
    fn json_layout() {
        let t = coeff_table(4, 1).unwrap();
        let s = serde_json::to_string(&t.to_json()).unwrap();
        assert!(s.starts_with(r#"{"n":4,"i":1,"entries":[[0,0,"#), "{s}");
    }
}
