use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_with::{serde_as, DisplayFromStr};

use crate::arith::BigRat;
use crate::concavity::is_unimodal;
use crate::error::{AbelHypothesis, Error, Result};

/// Summation by parts for `Σ a_t b_t` with prefix sums `A_t = a_0 + ... + a_t`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelTrace {
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub prefix_sums: Vec<BigRat>,
    /// `Σ a_t b_t`
    #[serde_as(as = "DisplayFromStr")]
    pub weighted_sum: BigRat,
    /// `Σ A_t (b_t - b_{t+1})` with `b_{s+1} = 0`
    #[serde_as(as = "DisplayFromStr")]
    pub by_parts_sum: BigRat,
    pub prefix_unimodal: bool,
}

impl AbelTrace {
    pub fn holds(&self) -> bool {
        !self.weighted_sum.is_negative()
            && self.weighted_sum == self.by_parts_sum
            && self.prefix_unimodal
    }
}

/// Checks the hypotheses (tail-sign pattern on `a`, `b` weakly decreasing and
/// nonnegative, `Σ a >= 0`) and then the conclusion `Σ a_t b_t >= 0`.
pub fn abel_sum_check(a: &[BigRat], b: &[BigRat]) -> Result<AbelTrace> {
    if a.len() != b.len() {
        return Err(Error::Length {
            expected: a.len(),
            found: b.len(),
        });
    }
    let fail = |hypothesis, index| Err(Error::AbelHypothesis { hypothesis, index });
    if let Some(first) = a.iter().position(|x| x.is_negative()) {
        if let Some(t) = (first..a.len()).find(|&t| a[t].is_positive()) {
            return fail(AbelHypothesis::TailSign, t);
        }
    }
    if let Some(t) = b.iter().position(|x| x.is_negative()) {
        return fail(AbelHypothesis::NegativeWeight, t);
    }
    if let Some(t) = (1..b.len()).find(|&t| b[t] > b[t - 1]) {
        return fail(AbelHypothesis::NotDecreasing, t);
    }

    let prefix_sums: Vec<BigRat> = a
        .iter()
        .scan(BigRat::zero(), |acc, x| {
            *acc += x;
            Some(acc.clone())
        })
        .collect();
    if prefix_sums.last().is_some_and(|s| s.is_negative()) {
        return fail(AbelHypothesis::NegativeTotal, a.len());
    }

    let weighted_sum = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let zero = BigRat::zero();
    let by_parts_sum = prefix_sums
        .iter()
        .enumerate()
        .map(|(t, s)| s * (&b[t] - b.get(t + 1).unwrap_or(&zero)))
        .sum();
    let prefix_unimodal = is_unimodal(&prefix_sums).verdict;
    Ok(AbelTrace {
        prefix_sums,
        weighted_sum,
        by_parts_sum,
        prefix_unimodal,
    })
}
