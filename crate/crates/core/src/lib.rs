//! Exact arithmetic toolkit for symmetric polynomials and their γ-vectors.
//!
//! The crate covers four areas:
//!
//! * [`poly`]: the change of basis between the coefficients `h_0..h_n` of a
//!   polynomial symmetric about `n/2` and its γ-vector, i.e. the coefficients
//!   of the expansion in `x^j (1+x)^(n-2j)`.
//! * [`concavity`]: log-concavity, ultra log-concavity, unimodality and
//!   internal-zero predicates with witnesses, plus the transfer checks from
//!   a γ-vector to its polynomial.
//! * [`coefficients`]: the integers `c_jk^(i)` expressing `h_i^2 - h_{i-1} h_{i+1}`
//!   as a quadratic form in the γ's, their diagonal sign structure and the
//!   summation-by-parts lemma.
//! * [`paths`]: north-east lattice paths and the path-counting certificate
//!   for the binomial inequality behind the coefficient sums.
//!
//! Everything is computed with arbitrary-precision integers and rationals.

pub mod arith;
pub mod coefficients;
pub mod concavity;
pub mod error;
pub mod paths;
pub mod poly;
pub mod sweep;

pub use arith::{binomial, parse_rational, parse_rational_list, BigRat};
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use poly::{basis_polynomial, gamma_to_h, h_to_gamma, GammaVector, SymmetricPolynomial};
