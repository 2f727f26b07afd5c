//! Sequence predicates with witnesses, and the γ → h transfer checks.
//!
//! Witnesses are the lexicographically first index tuple at which the
//! defining inequality fails (or, for internal zeros, at which a zero is
//! enclosed by nonzero entries).

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{binomial, format_rational, BigRat};
use crate::error::{Error, Result};
use crate::poly::{gamma_to_h, GammaVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Predicate {
    LogConcave,
    InternalZeros,
    UltraLogConcave { order: i64 },
    Unimodal,
    PairwiseLogConcave,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub kind: Predicate,
    pub verdict: bool,
    /// Present when the property is violated; for [`Predicate::InternalZeros`]
    /// it is present when the verdict is `true` and locates the zero.
    pub witness: Option<Vec<usize>>,
}

impl SequenceReport {
    fn pass(kind: Predicate) -> Self {
        SequenceReport {
            kind,
            verdict: true,
            witness: None,
        }
    }

    fn fail(kind: Predicate, witness: Vec<usize>) -> Self {
        SequenceReport {
            kind,
            verdict: false,
            witness: Some(witness),
        }
    }
}

fn check_nonnegative(a: &[BigRat]) -> Result<()> {
    match a.iter().position(|x| x.is_negative()) {
        Some(index) => Err(Error::NegativeEntry {
            index,
            value: format_rational(&a[index]),
        }),
        None => Ok(()),
    }
}

/// `a_i^2 >= a_{i-1} a_{i+1}` for every internal `i`.
pub fn is_log_concave(a: &[BigRat]) -> Result<SequenceReport> {
    check_nonnegative(a)?;
    let kind = Predicate::LogConcave;
    for i in 1..a.len().saturating_sub(1) {
        if &a[i] * &a[i] < &a[i - 1] * &a[i + 1] {
            return Ok(SequenceReport::fail(kind, vec![i]));
        }
    }
    Ok(SequenceReport::pass(kind))
}

/// Verdict `true` iff some zero sits strictly between two nonzero entries.
pub fn has_internal_zeros(a: &[BigRat]) -> SequenceReport {
    let kind = Predicate::InternalZeros;
    let no = SequenceReport {
        kind,
        verdict: false,
        witness: None,
    };
    let Some(first) = a.iter().position(|x| !x.is_zero()) else {
        return no;
    };
    let Some(last) = a.iter().rposition(|x| !x.is_zero()) else {
        return no;
    };
    match (first..last).find(|&k| a[k].is_zero()) {
        Some(k) => {
            let j = (k + 1..=last).find(|&j| !a[j].is_zero()).expect("a[last] != 0");
            SequenceReport {
                kind,
                verdict: true,
                witness: Some(vec![first, k, j]),
            }
        }
        None => no,
    }
}

/// Log-concavity of `a_i / C(m, i)`, checked as
/// `a_i^2 C(m,i-1) C(m,i+1) >= a_{i-1} a_{i+1} C(m,i)^2`.
pub fn is_ultra_log_concave(a: &[BigRat], m: i64) -> Result<SequenceReport> {
    if m < a.len() as i64 - 1 {
        return Err(Error::OrderTooSmall {
            order: m,
            len: a.len(),
        });
    }
    check_nonnegative(a)?;
    let kind = Predicate::UltraLogConcave { order: m };
    let c = |k: usize| BigRat::from_integer(binomial(m, k as i64));
    for i in 1..a.len().saturating_sub(1) {
        let lhs = &a[i] * &a[i] * c(i - 1) * c(i + 1);
        let rhs = &a[i - 1] * &a[i + 1] * c(i) * c(i);
        if lhs < rhs {
            return Ok(SequenceReport::fail(kind, vec![i]));
        }
    }
    Ok(SequenceReport::pass(kind))
}

/// Weakly increasing then weakly decreasing. The witness is the first triple
/// `(i, k, j)`, `i < k < j`, with `a_k < a_i` and `a_k < a_j`.
pub fn is_unimodal(a: &[BigRat]) -> SequenceReport {
    let kind = Predicate::Unimodal;
    let len = a.len();
    // suffix_max[k] = index of a maximal entry in a[k..]
    let mut suffix_max = vec![0usize; len];
    for k in (0..len).rev() {
        suffix_max[k] = if k + 1 < len && a[suffix_max[k + 1]] > a[k] {
            suffix_max[k + 1]
        } else {
            k
        };
    }
    for i in 0..len {
        for k in i + 1..len.saturating_sub(1) {
            if a[k] < a[i] && a[suffix_max[k + 1]] > a[k] {
                let j = (k + 1..len).find(|&j| a[j] > a[k]).expect("suffix max exceeds a[k]");
                return SequenceReport::fail(kind, vec![i, k, j]);
            }
        }
    }
    SequenceReport::pass(kind)
}

/// `a_i a_{j-1} >= a_{i-1} a_j` for all `1 <= i <= j <= len-1`; witness `(i, j)`.
pub fn pairwise_lc(a: &[BigRat]) -> Result<SequenceReport> {
    check_nonnegative(a)?;
    let kind = Predicate::PairwiseLogConcave;
    for i in 1..a.len() {
        for j in i..a.len() {
            if &a[i] * &a[j - 1] < &a[i - 1] * &a[j] {
                return Ok(SequenceReport::fail(kind, vec![i, j]));
            }
        }
    }
    Ok(SequenceReport::pass(kind))
}

/// Outcome of checking one instance of "γ has property X without internal
/// zeros ⇒ h has property Y without internal zeros".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferRecord {
    pub n: usize,
    pub gamma: SequenceReport,
    pub gamma_internal_zeros: SequenceReport,
    pub h: SequenceReport,
    pub h_internal_zeros: SequenceReport,
    pub hypothesis: bool,
    pub conclusion: bool,
    /// Hypothesis holds but the conclusion fails.
    pub violation: bool,
}

impl TransferRecord {
    fn assemble(
        n: usize,
        gamma: SequenceReport,
        gamma_internal_zeros: SequenceReport,
        h: SequenceReport,
        h_internal_zeros: SequenceReport,
    ) -> Self {
        let hypothesis = gamma.verdict && !gamma_internal_zeros.verdict;
        let conclusion = h.verdict && !h_internal_zeros.verdict;
        TransferRecord {
            n,
            gamma,
            gamma_internal_zeros,
            h,
            h_internal_zeros,
            hypothesis,
            conclusion,
            violation: hypothesis && !conclusion,
        }
    }
}

/// γ log-concave without internal zeros ⇒ h log-concave without internal zeros.
/// The converse is not checked; it is false in general.
pub fn check_main_theorem(g: &GammaVector) -> Result<TransferRecord> {
    check_nonnegative(g.coeffs())?;
    let h = gamma_to_h(g);
    Ok(TransferRecord::assemble(
        g.n(),
        is_log_concave(g.coeffs())?,
        has_internal_zeros(g.coeffs()),
        is_log_concave(h.coeffs())?,
        has_internal_zeros(h.coeffs()),
    ))
}

/// γ ultra log-concave of order ⌊n/2⌋ without internal zeros ⇒ h ultra
/// log-concave of order n without internal zeros.
pub fn check_ulc_transfer(g: &GammaVector) -> Result<TransferRecord> {
    check_nonnegative(g.coeffs())?;
    let n = g.n();
    let h = gamma_to_h(g);
    Ok(TransferRecord::assemble(
        n,
        is_ultra_log_concave(g.coeffs(), (n / 2) as i64)?,
        has_internal_zeros(g.coeffs()),
        is_ultra_log_concave(h.coeffs(), n as i64)?,
        has_internal_zeros(h.coeffs()),
    ))
}
