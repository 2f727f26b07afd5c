//! Symmetric polynomials and the γ basis `x^j (1+x)^(n-2j)`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, format_rational, parse_rational, BigRat};
use crate::error::{Error, Result};

/// Coefficients `h_0..h_n` of a polynomial with `h_i = h_{n-i}`.
///
/// The vector always has length `n + 1`; trailing zeros are kept because the
/// symmetry parameter is not tied to the degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CoeffsJson", into = "CoeffsJson")]
pub struct SymmetricPolynomial {
    n: usize,
    coeffs: Vec<BigRat>,
}

/// Coefficients `γ_0..γ_⌊n/2⌋` of `h(x) = Σ γ_j x^j (1+x)^(n-2j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CoeffsJson", into = "CoeffsJson")]
pub struct GammaVector {
    n: usize,
    coeffs: Vec<BigRat>,
}

impl SymmetricPolynomial {
    pub fn new(n: usize, coeffs: Vec<BigRat>) -> Result<Self> {
        if coeffs.len() != n + 1 {
            return Err(Error::Length {
                expected: n + 1,
                found: coeffs.len(),
            });
        }
        for index in 0..=n / 2 {
            let mirror = n - index;
            if coeffs[index] != coeffs[mirror] {
                return Err(Error::SymmetryViolation {
                    index,
                    mirror,
                    left: format_rational(&coeffs[index]),
                    right: format_rational(&coeffs[mirror]),
                });
            }
        }
        Ok(SymmetricPolynomial { n, coeffs })
    }

    /// Takes `n` from the length of the slice.
    pub fn from_coeffs(coeffs: Vec<BigRat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::range("a symmetric polynomial needs at least one coefficient"));
        }
        Self::new(coeffs.len() - 1, coeffs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRat> {
        self.coeffs
    }

    /// Evaluates the polynomial exactly.
    pub fn eval(&self, x: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * x + c)
    }
}

impl GammaVector {
    pub fn new(n: usize, coeffs: Vec<BigRat>) -> Result<Self> {
        if coeffs.len() != n / 2 + 1 {
            return Err(Error::Length {
                expected: n / 2 + 1,
                found: coeffs.len(),
            });
        }
        Ok(GammaVector { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRat> {
        self.coeffs
    }
}

/// `h_i = Σ_{j ≤ i} C(n-2j, i-j) γ_j`.
pub fn gamma_to_h(g: &GammaVector) -> SymmetricPolynomial {
    let n = g.n as i64;
    let coeffs = (0..=n)
        .map(|i| {
            g.coeffs
                .iter()
                .enumerate()
                .take(i as usize + 1)
                .fold(BigRat::zero(), |acc, (j, gj)| {
                    let c = binomial(n - 2 * j as i64, i - j as i64);
                    if c.is_zero() || gj.is_zero() {
                        acc
                    } else {
                        acc + gj * BigRat::from_integer(c)
                    }
                })
        })
        .collect();
    SymmetricPolynomial { n: g.n, coeffs }
}

/// Inverts [`gamma_to_h`] by forward substitution on `h_0..h_⌊n/2⌋`;
/// the leading coefficient `C(n-2i, 0)` of each step is 1.
pub fn h_to_gamma(p: &SymmetricPolynomial) -> GammaVector {
    let n = p.n as i64;
    let mut gamma: Vec<BigRat> = Vec::with_capacity(p.n / 2 + 1);
    for i in 0..=n / 2 {
        let mut g = p.coeffs[i as usize].clone();
        for (j, gj) in gamma.iter().enumerate() {
            let c = binomial(n - 2 * j as i64, i - j as i64);
            g -= gj * BigRat::from_integer(c);
        }
        gamma.push(g);
    }
    GammaVector { n: p.n, coeffs: gamma }
}

/// Monomial coefficients of `x^j (1+x)^(n-2j)`: entry `C(n-2j, i-j)` at `i`.
pub fn basis_polynomial(n: usize, j: usize) -> Result<Vec<BigInt>> {
    if j > n / 2 {
        return Err(Error::range(format!(
            "basis index j = {j} exceeds floor(n/2) = {}",
            n / 2
        )));
    }
    let (n, j) = (n as i64, j as i64);
    Ok((0..=n).map(|i| binomial(n - 2 * j, i - j)).collect())
}

/// Wire format: `{"n": 6, "coeffs": ["1", "7/2", ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffsJson {
    pub n: usize,
    pub coeffs: Vec<String>,
}

fn parse_coeffs(raw: &[String]) -> Result<Vec<BigRat>> {
    raw.iter().map(|s| parse_rational(s)).collect()
}

impl TryFrom<CoeffsJson> for SymmetricPolynomial {
    type Error = Error;
    fn try_from(raw: CoeffsJson) -> Result<Self> {
        SymmetricPolynomial::new(raw.n, parse_coeffs(&raw.coeffs)?)
    }
}

impl TryFrom<CoeffsJson> for GammaVector {
    type Error = Error;
    fn try_from(raw: CoeffsJson) -> Result<Self> {
        GammaVector::new(raw.n, parse_coeffs(&raw.coeffs)?)
    }
}

impl From<SymmetricPolynomial> for CoeffsJson {
    fn from(p: SymmetricPolynomial) -> Self {
        CoeffsJson {
            n: p.n,
            coeffs: p.coeffs.iter().map(format_rational).collect(),
        }
    }
}

impl From<GammaVector> for CoeffsJson {
    fn from(g: GammaVector) -> Self {
        CoeffsJson {
            n: g.n,
            coeffs: g.coeffs.iter().map(format_rational).collect(),
        }
    }
}
