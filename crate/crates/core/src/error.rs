use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which hypothesis of the summation-by-parts lemma failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbelHypothesis {
    /// A strictly negative entry of `a` is followed by a positive one.
    TailSign,
    /// `b` increases somewhere.
    NotDecreasing,
    /// `b` has a negative entry.
    NegativeWeight,
    /// `a` sums to a negative number.
    NegativeTotal,
}

impl std::fmt::Display for AbelHypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            AbelHypothesis::TailSign => "tail-sign pattern of a",
            AbelHypothesis::NotDecreasing => "b weakly decreasing",
            AbelHypothesis::NegativeWeight => "b nonnegative",
            AbelHypothesis::NegativeTotal => "sum of a nonnegative",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symmetry violated at index {index}: h[{index}] = {left} but h[{mirror}] = {right}")]
    SymmetryViolation {
        index: usize,
        mirror: usize,
        left: String,
        right: String,
    },

    #[error("expected {expected} coefficients, got {found}")]
    Length { expected: usize, found: usize },

    #[error("out of range: {0}")]
    Range(String),

    #[error("negative entry {value} at index {index}")]
    NegativeEntry { index: usize, value: String },

    #[error("order {order} is too small for a sequence of length {len}")]
    OrderTooSmall { order: i64, len: usize },

    #[error("hypothesis violated ({hypothesis}) at index {index}")]
    AbelHypothesis {
        hypothesis: AbelHypothesis,
        index: usize,
    },

    #[error("denominator factor {factor} = {value} is not positive")]
    DegenerateFactor { factor: &'static str, value: i64 },

    #[error("enumeration would produce {count} paths, above the cap of {cap}")]
    CapExceeded { count: BigInt, cap: u64 },

    #[error("path does not run from {expected_start} to {expected_end}")]
    EndpointMismatch {
        expected_start: String,
        expected_end: String,
    },

    #[error("CLAIM-VIOLATION: {0}")]
    ClaimViolation(String),

    #[error("DECOMPOSITION-MISMATCH: certificate total {total} but LHS - RHS = {expected}")]
    DecompositionMismatch { total: BigInt, expected: BigInt },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl Error {
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
}
