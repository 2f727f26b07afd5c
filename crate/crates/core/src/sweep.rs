//! Exhaustive sweeps over parameter ranges, run in parallel. Each returns a
//! summary listing every failing case; results are independent of thread
//! scheduling.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::rat;
use crate::coefficients::{
    c_coeff, c_coeff_oracle, degenerate_case_check, diagonal, quadratic_ab, quadratic_ab_odd, r_sum,
    rational_identity_check, Parity,
};
use crate::concavity::{check_main_theorem, check_ulc_transfer};
use crate::error::{Error, Result};
use crate::paths::{
    certificate, claim1_check, claim2_check_all, lhs_by_formula, lhs_by_paths, rhs_by_formula, rhs_by_paths,
    SegmentConfig,
};
use crate::poly::GammaVector;

/// Failing cases are reported as human-readable strings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub cases: u64,
    pub failures: Vec<String>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: SweepSummary) -> SweepSummary {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }

    fn single(failure: Option<String>) -> SweepSummary {
        SweepSummary { cases: 1, failures: failure.into_iter().collect() }
    }
}

fn collect(parts: Vec<SweepSummary>) -> SweepSummary {
    parts.into_iter().fold(SweepSummary::default(), SweepSummary::merge)
}

/// Closed form against the expansion oracle for all `2 <= n <= max_n`,
/// `1 <= i <= n-1`, `0 <= j <= k <= ⌊n/2⌋`.
pub fn oracle_sweep(max_n: i64) -> Result<SweepSummary> {
    let cases: Vec<(i64, i64)> = (2..=max_n).flat_map(|n| (1..n).map(move |i| (n, i))).collect();
    let parts = cases
        .par_iter()
        .map(|&(n, i)| -> Result<SweepSummary> {
            let mut s = SweepSummary::default();
            for k in 0..=n / 2 {
                for j in 0..=k {
                    let (c, o) = (c_coeff(n, i, j, k)?, c_coeff_oracle(n, i, j, k)?);
                    s = s.merge(SweepSummary::single(
                        (c != o).then(|| format!("n={n} i={i} j={j} k={k}: closed form {c}, oracle {o}")),
                    ));
                }
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(collect(parts))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DiagonalSweep {
    pub tail_sign: SweepSummary,
    /// `A < 0` and `B > 0`, for both parities.
    pub quadratic_signs: SweepSummary,
    /// The factorised identity wherever all denominator factors are positive.
    pub identity: SweepSummary,
    /// Sign class of the coefficient where a factor vanishes.
    pub degenerate: SweepSummary,
}

impl DiagonalSweep {
    pub fn passed(&self) -> bool {
        self.tail_sign.passed() && self.quadratic_signs.passed() && self.identity.passed() && self.degenerate.passed()
    }
}

/// Diagonal sign structure for `2 <= n <= max_n`, `1 <= i <= ⌊n/2⌋`,
/// `1 <= l <= ⌊(i+1)/2⌋`, both parities.
pub fn diagonal_sweep(max_n: i64) -> Result<DiagonalSweep> {
    let mut cases = Vec::new();
    for n in 2..=max_n {
        for i in 1..=n / 2 {
            for ell in 1..=(i + 1) / 2 {
                for parity in [Parity::Even, Parity::Odd] {
                    cases.push((n, i, ell, parity));
                }
            }
        }
    }
    let parts = cases
        .par_iter()
        .map(|&(n, i, ell, parity)| -> Result<DiagonalSweep> {
            let tag = format!("n={n} i={i} l={ell} {parity:?}");
            let mut out = DiagonalSweep::default();
            let d = diagonal(n, i, ell, parity)?;
            out.tail_sign = SweepSummary::single((!d.tail_sign_ok()).then(|| format!("{tag}: {:?}", d.values)));
            let quad = match parity {
                Parity::Even => quadratic_ab(n, i, ell)?,
                Parity::Odd => quadratic_ab_odd(n, i, ell)?,
            };
            out.quadratic_signs = SweepSummary::single(
                (!quad.a.is_negative() || !quad.b.is_positive())
                    .then(|| format!("{tag}: A={} B={}", quad.a, quad.b)),
            );
            let start = if parity == Parity::Even { 1 } else { 0 };
            let last = match parity {
                Parity::Even => ell,
                Parity::Odd => ell - 1,
            };
            for j in start..=last {
                match rational_identity_check(n, i, ell, j, parity) {
                    Ok(chk) => {
                        let sign_ok = chk.coefficient.sign() == quad.eval(j).sign();
                        out.identity = std::mem::take(&mut out.identity).merge(SweepSummary::single(
                            (!chk.holds() || !sign_ok).then(|| {
                                format!("{tag} j={j}: c={} closed form={}", chk.coefficient, chk.closed_form)
                            }),
                        ));
                    }
                    Err(Error::DegenerateFactor { .. }) => {
                        let (case, ok) = degenerate_case_check(n, i, ell, j, parity)?;
                        out.degenerate = std::mem::take(&mut out.degenerate)
                            .merge(SweepSummary::single((!ok).then(|| format!("{tag} j={j}: expected {case:?}"))));
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(DiagonalSweep::default(), |a, b| DiagonalSweep {
        tail_sign: a.tail_sign.merge(b.tail_sign),
        quadratic_signs: a.quadratic_signs.merge(b.quadratic_signs),
        identity: a.identity.merge(b.identity),
        degenerate: a.degenerate.merge(b.degenerate),
    }))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RSumSweep {
    /// `r_sum >= 0` over `0 <= r <= 2i`.
    pub nonnegative: SweepSummary,
    /// `r_sum = 0` over `i + 1 <= r <= 2i`.
    pub vanishing: SweepSummary,
    /// The vanishing check restricted to `i <= ⌊n/2⌋ - 1`.
    pub vanishing_interior: SweepSummary,
}

/// `r_sum(n, i, r)` for `2 <= n <= max_n`, `1 <= i <= ⌊n/2⌋`, `0 <= r <= 2i`.
pub fn r_sum_sweep(max_n: i64) -> Result<RSumSweep> {
    let cases: Vec<(i64, i64)> = (2..=max_n).flat_map(|n| (1..=n / 2).map(move |i| (n, i))).collect();
    let parts = cases
        .par_iter()
        .map(|&(n, i)| -> Result<RSumSweep> {
            let mut out = RSumSweep::default();
            for r in 0..=2 * i {
                let v = r_sum(n, i, r)?;
                let tag = format!("n={n} i={i} r={r}: {v}");
                out.nonnegative = std::mem::take(&mut out.nonnegative)
                    .merge(SweepSummary::single(v.is_negative().then(|| tag.clone())));
                if r > i {
                    let bad = (!v.is_zero()).then(|| tag.clone());
                    if i < n / 2 {
                        out.vanishing_interior =
                            std::mem::take(&mut out.vanishing_interior).merge(SweepSummary::single(bad.clone()));
                    }
                    out.vanishing = std::mem::take(&mut out.vanishing).merge(SweepSummary::single(bad));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(RSumSweep::default(), |a, b| RSumSweep {
        nonnegative: a.nonnegative.merge(b.nonnegative),
        vanishing: a.vanishing.merge(b.vanishing),
        vanishing_interior: a.vanishing_interior.merge(b.vanishing_interior),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathCase {
    pub n: i64,
    pub i: i64,
    pub r: i64,
    pub lhs_matches: bool,
    pub rhs_matches: bool,
    pub claim1: bool,
    pub claim2: bool,
    /// Certificate total equals `LHS - RHS` of the binomial formula.
    pub certificate: bool,
    pub detail: Option<String>,
}

impl PathCase {
    pub fn passed(&self) -> bool {
        self.lhs_matches && self.rhs_matches && self.claim1 && self.claim2 && self.certificate
    }
}

/// All path identities for `0 <= n <= max_n`, `0 <= i <= ⌊n/2⌋`,
/// `0 <= r <= 2i`.
pub fn path_sweep(max_n: i64, cap: u64) -> Result<Vec<PathCase>> {
    let mut cases = Vec::new();
    for n in 0..=max_n {
        for i in 0..=n / 2 {
            for r in 0..=2 * i {
                cases.push((n, i, r));
            }
        }
    }
    cases
        .par_iter()
        .map(|&(n, i, r)| -> Result<PathCase> {
            let cfg = SegmentConfig::new(n, i, r)?;
            let (lf, rf) = (lhs_by_formula(&cfg), rhs_by_formula(&cfg));
            let (lp, rp) = (lhs_by_paths(&cfg, cap)?, rhs_by_paths(&cfg, cap)?);
            let mut detail = Vec::new();
            if lp != lf || rp != rf {
                detail.push(format!("paths {lp} - {rp}, formula {lf} - {rf}"));
            }
            let claim1 = match claim1_check(&cfg, cap) {
                Ok(_) => true,
                Err(Error::ClaimViolation(m)) => {
                    detail.push(m);
                    false
                }
                Err(e) => return Err(e),
            };
            let claim2 = match claim2_check_all(&cfg, cap) {
                Ok(_) => true,
                Err(Error::ClaimViolation(m)) => {
                    detail.push(m);
                    false
                }
                Err(e) => return Err(e),
            };
            let certificate = match certificate(&cfg, cap) {
                Ok(c) => c.total == &lf - &rf,
                Err(e @ (Error::DecompositionMismatch { .. } | Error::ClaimViolation(_))) => {
                    detail.push(e.to_string());
                    false
                }
                Err(e) => return Err(e),
            };
            Ok(PathCase {
                n,
                i,
                r,
                lhs_matches: lp == lf,
                rhs_matches: rp == rf,
                claim1,
                claim2,
                certificate,
                detail: (!detail.is_empty()).then(|| detail.join("; ")),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TransferSweep {
    pub vectors: u64,
    /// Vectors satisfying the hypothesis of the log-concavity transfer.
    pub lc_hypothesis: u64,
    pub lc_violations: Vec<String>,
    pub ulc_hypothesis: u64,
    pub ulc_violations: Vec<String>,
}

impl TransferSweep {
    pub fn passed(&self) -> bool {
        self.lc_violations.is_empty() && self.ulc_violations.is_empty()
    }

    pub fn record(&mut self, g: &GammaVector) -> Result<()> {
        self.vectors += 1;
        let lc = check_main_theorem(g)?;
        let ulc = check_ulc_transfer(g)?;
        let show = || {
            format!(
                "n={} gamma={:?}",
                g.n(),
                g.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>()
            )
        };
        self.lc_hypothesis += lc.hypothesis as u64;
        if lc.violation {
            self.lc_violations.push(show());
        }
        self.ulc_hypothesis += ulc.hypothesis as u64;
        if ulc.violation {
            self.ulc_violations.push(show());
        }
        Ok(())
    }

    pub fn merge(mut self, other: TransferSweep) -> TransferSweep {
        self.vectors += other.vectors;
        self.lc_hypothesis += other.lc_hypothesis;
        self.lc_violations.extend(other.lc_violations);
        self.ulc_hypothesis += other.ulc_hypothesis;
        self.ulc_violations.extend(other.ulc_violations);
        self
    }
}

/// Every γ-vector with entries in `0..=max_entry` for `0 <= n <= max_n`.
pub fn transfer_exhaustive(max_n: usize, max_entry: u32) -> Result<TransferSweep> {
    let base = max_entry as u64 + 1;
    let mut jobs = Vec::new();
    for n in 0..=max_n {
        let len = n / 2 + 1;
        jobs.extend((0..base.pow(len as u32)).map(|code| (n, code)));
    }
    let parts = jobs
        .par_chunks(4096)
        .map(|chunk| -> Result<TransferSweep> {
            let mut s = TransferSweep::default();
            for &(n, mut code) in chunk {
                let coeffs = (0..n / 2 + 1)
                    .map(|_| {
                        let d = code % base;
                        code /= base;
                        rat(d as i64)
                    })
                    .collect();
                s.record(&GammaVector::new(n, coeffs)?)?;
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(TransferSweep::default(), TransferSweep::merge))
}
